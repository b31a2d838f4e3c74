use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use anyon_data::{fuse, parse_labels, Label};
use serde_json::{json, Value};

use crate::SpaceError;

/// Left-comb fusion tree: leaves l0..lk, internal edges a1..a(k-1), root ak,
/// with a_i in a_(i-1) x l_i and a_0 = l0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FusionTree {
    pub leaves: Vec<Label>,
    pub internal: Vec<Label>,
    pub root: Label,
}

impl FusionTree {
    /// Builds a tree from its leaves and the labels a1..ak (the last one is the root).
    pub fn from_chain(leaves: &[Label], chain: &[Label]) -> Result<Self, SpaceError> {
        if leaves.is_empty() || chain.len() + 1 != leaves.len() {
            return Err(SpaceError::BadTree(format!("{} leaves but {} chain labels", leaves.len(), chain.len())));
        }
        let root = *chain.last().unwrap_or(&leaves[0]);
        let internal = if chain.is_empty() { vec![] } else { chain[..chain.len() - 1].to_vec() };
        let t = FusionTree { leaves: leaves.to_vec(), internal, root };
        t.check()?;
        Ok(t)
    }

    /// a_0, a_1, ..., a_k where a_0 is the first leaf and a_k the root.
    pub fn chain(&self) -> Vec<Label> {
        let mut c = Vec::with_capacity(self.leaves.len());
        c.push(self.leaves[0]);
        c.extend_from_slice(&self.internal);
        if self.leaves.len() > 1 {
            c.push(self.root);
        }
        c
    }

    /// The fusion vertices (a_(i-1), l_i, a_i).
    pub fn vertices(&self) -> Vec<(Label, Label, Label)> {
        let c = self.chain();
        (1..self.leaves.len()).map(|i| (c[i - 1], self.leaves[i], c[i])).collect()
    }

    pub fn check(&self) -> Result<(), SpaceError> {
        for (a, l, c) in self.vertices() {
            if !fuse(a, l)?.contains(&c) {
                return Err(SpaceError::BadTree(format!("{a} x {l} does not contain {c}")));
            }
        }
        Ok(())
    }

    /// Compact form `(a,s,s|a+1|a)`: leaves, internal labels, root.
    pub fn compact(&self) -> String {
        let join = |ls: &[Label]| ls.iter().map(|l| l.token()).collect::<Vec<_>>().join(",");
        format!("({}|{}|{})", join(&self.leaves), join(&self.internal), self.root.token())
    }

    pub fn to_json(&self) -> Value {
        let toks = |ls: &[Label]| ls.iter().map(|l| l.token()).collect::<Vec<_>>();
        json!({ "leaves": toks(&self.leaves), "internal": toks(&self.internal), "root": self.root.token() })
    }
}

impl fmt::Display for FusionTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact())
    }
}

impl FromStr for FusionTree {
    type Err = SpaceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.trim().strip_prefix('(').and_then(|b| b.strip_suffix(')')).ok_or_else(|| SpaceError::BadTree(s.to_string()))?;
        let parts: Vec<&str> = body.split('|').collect();
        let [leaves, internal, root] = parts[..] else {
            return Err(SpaceError::BadTree(s.to_string()));
        };
        let leaves = parse_labels(leaves)?;
        let mut chain = parse_labels(internal)?;
        if leaves.len() > 1 {
            chain.push(root.parse()?);
        }
        let t = FusionTree::from_chain(&leaves, &chain)?;
        if t.root != root.parse()? {
            return Err(SpaceError::BadTree(s.to_string()));
        }
        Ok(t)
    }
}

fn label_key(l: &Label) -> (i32, i32) {
    match *l {
        Label::Alpha(k) => (0, -k),
        Label::Vacuum => (1, 0),
        Label::Sigma => (1, 1),
        Label::Psi => (1, 2),
        Label::S32 => (1, 3),
        Label::P2 => (1, 4),
    }
}

/// Lexicographic order on internal labels, alpha shifts descending.
pub fn lex_cmp(a: &FusionTree, b: &FusionTree) -> Ordering {
    a.internal.iter().map(label_key).cmp(b.internal.iter().map(label_key))
}

/// All admissible left-comb trees on `leaves` with total charge `charge`, in lexicographic order.
pub fn enumerate_basis(leaves: &[Label], charge: Label) -> Result<Vec<FusionTree>, SpaceError> {
    if leaves.is_empty() {
        return Err(SpaceError::EmptyBasis);
    }
    let mut chains: Vec<Vec<Label>> = vec![vec![]];
    let mut heads = vec![leaves[0]];
    for &leaf in &leaves[1..] {
        let mut next_chains = Vec::new();
        let mut next_heads = Vec::new();
        for (chain, &head) in chains.iter().zip(&heads) {
            for c in fuse(head, leaf)? {
                let mut ch = chain.clone();
                ch.push(c);
                next_chains.push(ch);
                next_heads.push(c);
            }
        }
        chains = next_chains;
        heads = next_heads;
    }
    let mut trees: Vec<FusionTree> = chains
        .into_iter()
        .zip(heads)
        .filter(|(_, h)| *h == charge)
        .map(|(ch, _)| FusionTree::from_chain(leaves, &ch))
        .collect::<Result<_, _>>()?;
    if trees.is_empty() {
        return Err(SpaceError::EmptyBasis);
    }
    trees.sort_by(lex_cmp);
    Ok(trees)
}
