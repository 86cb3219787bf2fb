use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use crate::analysis::{symmetry_prefix, VariableOrder};
use crate::dnf::Dnf;
use crate::point::full_mask;

use super::cut::cut_mask;
use super::interval::DegreeInterval;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeKind {
    /// Obtained by splitting away a whole block of symmetric variables.
    Main,
    /// Intermediate result inside a block, one variable at a time.
    Auxiliary,
}

impl NodeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            NodeKind::Main => "main",
            NodeKind::Auxiliary => "aux",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuccessorNode {
    /// Formula over the variables after `column`.
    pub formula: Dnf,
    /// Number of variables split away so far.
    pub column: usize,
    pub kind: NodeKind,
    /// A main node that is constant; it has no children.
    pub is_final: bool,
    /// Node indices of the 0- and 1-child (splitting away `x_{column+1}`).
    pub children: Option<(usize, usize)>,
}

/// All successors of a DNF, arranged in columns `0..=m`.
///
/// A non-constant main node `phi'` in column `n` whose next `l` variables are
/// symmetric spawns the nodes `cut(phi', {x_{n+1}..x_{n+l'}}, k)` for
/// `1 <= l' <= l` and `0 <= k <= l'`, placed in column `n + l'`. The nodes with
/// `l' = l` are the main nodes of the next block. Node `(l', k)` has the
/// children `(l' + 1, k)` and `(l' + 1, k + 1)`, so a block of `l`
/// variables needs `O(l^2)` nodes rather than `2^l`. Equal non-final main
/// nodes of a column are created once; final nodes are per block.
#[derive(Clone, Debug)]
pub struct SuccessorTable {
    num_vars: usize,
    nodes: Vec<SuccessorNode>,
    columns: Vec<Vec<usize>>,
}

impl SuccessorTable {
    /// Builds the table of `dnf`, which should be regular in index order
    /// (for instance renumbered by [`crate::analysis::op_order`]).
    pub fn build(dnf: &Dnf) -> Self {
        let m = dnf.num_vars();
        let root = dnf.normalize();
        let identity = VariableOrder::identity(m);
        let mut table = Self {
            num_vars: m,
            nodes: Vec::new(),
            columns: vec![Vec::new(); m + 1],
        };
        let root_final = root.is_constant();
        table.push(root, 0, NodeKind::Main, root_final);
        let mut pending: VecDeque<usize> = VecDeque::new();
        // non-final main nodes are shared within a column
        let mut mains: HashMap<(usize, Dnf), usize> = HashMap::new();
        if !root_final {
            pending.push_back(0);
        }

        while let Some(parent) = pending.pop_front() {
            let phi = table.nodes[parent].formula.clone();
            let n = table.nodes[parent].column;
            let l = symmetry_prefix(&phi, n + 1, &identity)
                .expect("non-constant node has a next variable");
            // block[l' - 1][k] is the node index of (l', k)
            let mut block: Vec<Vec<usize>> = Vec::with_capacity(l);
            for lp in 1..=l {
                let x = full_mask(n + lp) & !full_mask(n);
                let kind = if lp == l {
                    NodeKind::Main
                } else {
                    NodeKind::Auxiliary
                };
                let row: Vec<usize> = (0..=lp)
                    .map(|k| {
                        let f = cut_mask(&phi, x, k);
                        if kind == NodeKind::Auxiliary || f.is_constant() {
                            let is_final = kind == NodeKind::Main;
                            return table.push(f, n + lp, kind, is_final);
                        }
                        if let Some(&id) = mains.get(&(n + lp, f.clone())) {
                            return id;
                        }
                        let id = table.push(f.clone(), n + lp, kind, false);
                        mains.insert((n + lp, f), id);
                        pending.push_back(id);
                        id
                    })
                    .collect();
                block.push(row);
            }
            table.nodes[parent].children = Some((block[0][0], block[0][1]));
            for lp in 1..l {
                for k in 0..=lp {
                    let id = block[lp - 1][k];
                    table.nodes[id].children = Some((block[lp][k], block[lp][k + 1]));
                }
            }
        }
        table
    }

    fn push(&mut self, formula: Dnf, column: usize, kind: NodeKind, is_final: bool) -> usize {
        let id = self.nodes.len();
        self.nodes.push(SuccessorNode {
            formula,
            column,
            kind,
            is_final,
            children: None,
        });
        self.columns[column].push(id);
        id
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn root(&self) -> usize {
        0
    }

    pub fn nodes(&self) -> &[SuccessorNode] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> &SuccessorNode {
        &self.nodes[id]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Node indices of column `k`.
    pub fn column(&self, k: usize) -> &[usize] {
        &self.columns[k]
    }

    pub fn final_node_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.is_final).count()
    }

    /// Total number of literal occurrences over all node formulas.
    pub fn size(&self) -> usize {
        self.nodes.iter().map(|n| n.formula.literal_count()).sum()
    }

    /// Literal occurrences in column `k`.
    pub fn column_size(&self, k: usize) -> usize {
        self.columns[k]
            .iter()
            .map(|&id| self.nodes[id].formula.literal_count())
            .sum()
    }

    /// CSV with header `column,kind,final,formula,s,b`; the interval
    /// fields are empty when `intervals` is absent or has no entry.
    pub fn to_csv(&self, intervals: Option<&[Option<DegreeInterval>]>) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["column", "kind", "final", "formula", "s", "b"])
            .expect("in-memory write");
        for (id, n) in self.nodes.iter().enumerate() {
            let iv = intervals.and_then(|iv| iv[id]);
            let (s, b) = iv.map_or((String::new(), String::new()), |i| {
                (i.lower.to_string(), i.upper.to_string())
            });
            w.write_record([
                n.column.to_string(),
                n.kind.as_str().to_string(),
                n.is_final.to_string(),
                n.formula.formula(),
                s,
                b,
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    /// Graphviz rendering of the child DAG, one rank per column.
    pub fn to_dot(&self, intervals: Option<&[Option<DegreeInterval>]>) -> String {
        let mut out =
            String::from("digraph successors {\n  rankdir=LR;\n  node [fontname=\"monospace\"];\n");
        for (id, n) in self.nodes.iter().enumerate() {
            let mut label = n.formula.formula();
            if let Some(i) = intervals.and_then(|iv| iv[id]) {
                let _ = write!(label, "\\n{i}");
            }
            let shape = if n.is_final { "box" } else { "ellipse" };
            let style = if n.kind == NodeKind::Auxiliary {
                ", style=dashed"
            } else {
                ""
            };
            let _ = writeln!(out, "  n{id} [label=\"{label}\", shape={shape}{style}];");
        }
        for col in &self.columns {
            if col.len() > 1 {
                let ids: Vec<String> = col.iter().map(|id| format!("n{id}")).collect();
                let _ = writeln!(out, "  {{ rank=same; {} }}", ids.join("; "));
            }
        }
        for (id, n) in self.nodes.iter().enumerate() {
            if let Some((zero, one)) = n.children {
                let _ = writeln!(out, "  n{id} -> n{zero} [label=\"0\"];");
                let _ = writeln!(out, "  n{id} -> n{one} [label=\"1\"];");
            }
        }
        out.push_str("}\n");
        out
    }
}
