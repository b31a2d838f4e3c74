use anyon_data::Label;

use crate::tree::FusionTree;

/// Result of reading a tree as a bitstring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decoded {
    Bits(Vec<bool>),
    NonComputational,
}

/// n-qubit encoding in (alpha, sigma^{2n}): bit 0 takes alpha x sigma -> alpha+1,
/// bit 1 takes alpha -> alpha-1, and every second sigma returns the chain to alpha.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QubitCode {
    pub n: usize,
}

impl QubitCode {
    pub fn new(n: usize) -> Self {
        QubitCode { n }
    }

    pub fn leaves(&self) -> Vec<Label> {
        let mut l = vec![Label::ALPHA];
        l.extend(std::iter::repeat_n(Label::Sigma, 2 * self.n));
        l
    }

    pub fn encode(&self, bits: &[bool]) -> FusionTree {
        let mut chain = Vec::with_capacity(2 * bits.len());
        for &b in bits {
            chain.push(Label::Alpha(if b { -1 } else { 1 }));
            chain.push(Label::ALPHA);
        }
        let leaves = QubitCode::new(bits.len()).leaves();
        let root = chain.pop().unwrap_or(Label::ALPHA);
        FusionTree { leaves, internal: chain, root }
    }

    pub fn decode(&self, tree: &FusionTree) -> Decoded {
        let chain = tree.chain();
        if tree.leaves != self.leaves() || chain.len() != 2 * self.n + 1 {
            return Decoded::NonComputational;
        }
        let mut bits = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let (up, back) = (chain[2 * i + 1], chain[2 * i + 2]);
            if back != Label::ALPHA {
                return Decoded::NonComputational;
            }
            match up {
                Label::Alpha(1) => bits.push(false),
                Label::Alpha(-1) => bits.push(true),
                _ => return Decoded::NonComputational,
            }
        }
        Decoded::Bits(bits)
    }

    /// Parses `"0110"`-style strings.
    pub fn parse_bits(s: &str) -> Option<Vec<bool>> {
        s.chars()
            .map(|c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect()
    }

    pub fn format_bits(bits: &[bool]) -> String {
        bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::enumerate_basis;

    #[test]
    fn encode_one_zero() {
        let t = QubitCode::new(2).encode(&[true, false]);
        assert_eq!(t.internal, vec![Label::Alpha(-1), Label::ALPHA, Label::Alpha(1)]);
        assert_eq!(t.root, Label::ALPHA);
        t.check().unwrap();
    }

    #[test]
    fn noncomputational_detected() {
        let code = QubitCode::new(2);
        let t: FusionTree = "(a,s,s,s,s|a+1,a+2,a+1|a)".parse().unwrap();
        assert_eq!(code.decode(&t), Decoded::NonComputational);
    }

    #[test]
    fn zero_qubits() {
        let t = QubitCode::new(0).encode(&[]);
        assert_eq!(t.leaves, vec![Label::ALPHA]);
        assert_eq!(t.root, Label::ALPHA);
        assert_eq!(QubitCode::new(0).decode(&t), Decoded::Bits(vec![]));
    }

    #[test]
    fn exactly_two_to_the_n_computational_trees() {
        for n in 1..=4 {
            let code = QubitCode::new(n);
            let basis = enumerate_basis(&code.leaves(), Label::ALPHA).unwrap();
            let comp = basis.iter().filter(|t| matches!(code.decode(t), Decoded::Bits(_))).count();
            assert_eq!(comp, 1 << n);
        }
    }

    #[test]
    fn bit_strings() {
        assert_eq!(QubitCode::parse_bits("10"), Some(vec![true, false]));
        assert_eq!(QubitCode::parse_bits("1x"), None);
        assert_eq!(QubitCode::format_bits(&[false, true]), "01");
    }
}
