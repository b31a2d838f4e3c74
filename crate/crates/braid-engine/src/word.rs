use std::fmt;
use std::str::FromStr;

use crate::BraidError;

/// Affine braid generator. `Wrap` (X) takes strand 2 fully around the pole,
/// `Half` exchanges the pole with strand 2, `Exchange(i)` (i >= 2) swaps strands i and i+1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Wrap,
    Half,
    Exchange(usize),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Wrap => f.write_str("X"),
            Generator::Half => f.write_str("h1"),
            Generator::Exchange(i) => write!(f, "b{i}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: Generator,
    pub power: i32,
}

impl Letter {
    pub fn new(gen: Generator, power: i32) -> Self {
        Letter { gen, power }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.power {
            1 => write!(f, "{}", self.gen),
            p => write!(f, "{}^{}", self.gen, p),
        }
    }
}

impl FromStr for Letter {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase();
        let bad = || BraidError::Parse(s.to_string());
        let (head, power) = match t.split_once('^') {
            Some((h, p)) => (h, p.trim_start_matches('+').parse::<i32>().map_err(|_| bad())?),
            None => (t.as_str(), 1),
        };
        let gen = match head {
            "x" => Generator::Wrap,
            "h1" | "b1" => Generator::Half,
            _ => {
                let i = head.strip_prefix('b').and_then(|r| r.parse::<usize>().ok()).ok_or_else(bad)?;
                if i < 2 {
                    return Err(bad());
                }
                Generator::Exchange(i)
            }
        };
        Ok(Letter { gen, power })
    }
}

/// A braid word; the leftmost letter acts first on states.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BraidWord {
    pub letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        BraidWord { letters }
    }

    pub fn empty() -> Self {
        BraidWord::default()
    }

    pub fn single(gen: Generator, power: i32) -> Self {
        BraidWord { letters: vec![Letter::new(gen, power)] }
    }

    pub fn is_empty(&self) -> bool {
        self.letters.iter().all(|l| l.power == 0)
    }

    /// Word acting as the inverse: letters reversed with negated powers.
    pub fn inverse(&self) -> Self {
        BraidWord { letters: self.letters.iter().rev().map(|l| Letter::new(l.gen, -l.power)).collect() }
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &BraidWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { letters }
    }

    pub fn repeat(&self, n: usize) -> Self {
        BraidWord { letters: (0..n).flat_map(|_| self.letters.iter().copied()).collect() }
    }

    /// Merges adjacent letters on the same generator and drops zero powers.
    pub fn reduced(&self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match out.last_mut() {
                Some(last) if last.gen == l.gen => {
                    last.power += l.power;
                    if last.power == 0 {
                        out.pop();
                    }
                }
                _ if l.power != 0 => out.push(l),
                _ => {}
            }
        }
        BraidWord { letters: out }
    }

    /// Number of elementary crossings, sum of |power|.
    pub fn crossing_count(&self) -> usize {
        self.letters.iter().map(|l| l.power.unsigned_abs() as usize).sum()
    }

    /// Number of letters after reduction (each generator power counts once).
    pub fn syllable_count(&self) -> usize {
        self.reduced().letters.len()
    }

    /// Elementary steps (generator, inverse?) in application order.
    pub fn steps(&self) -> impl Iterator<Item = (Generator, bool)> + '_ {
        self.letters.iter().flat_map(|l| std::iter::repeat_n((l.gen, l.power < 0), l.power.unsigned_abs() as usize))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for BraidWord {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let letters = s
            .split(|c: char| c.is_whitespace() || c == ',' || c == '*')
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Letter>, _>>()?;
        Ok(BraidWord { letters })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_tokens_case_insensitively() {
        let w: BraidWord = "b2^2 X b2^2 x^-1 B2^-3 h1".parse().unwrap();
        assert_eq!(w.letters.len(), 6);
        assert_eq!(w.letters[1], Letter::new(Generator::Wrap, 1));
        assert_eq!(w.letters[3], Letter::new(Generator::Wrap, -1));
        assert_eq!(w.letters[4], Letter::new(Generator::Exchange(2), -3));
        assert_eq!(w.letters[5], Letter::new(Generator::Half, 1));
        assert_eq!(w.to_string(), "b2^2 X b2^2 X^-1 b2^-3 h1");
    }

    #[test]
    fn rejects_bad_tokens() {
        assert!("b0".parse::<BraidWord>().is_err());
        assert!("y2".parse::<BraidWord>().is_err());
        assert!("b2^x".parse::<BraidWord>().is_err());
    }

    #[test]
    fn reduction_and_counts() {
        let w: BraidWord = "X X^-1 b2 b2 X^2 b3^0".parse().unwrap();
        assert_eq!(w.reduced().to_string(), "b2^2 X^2");
        assert_eq!(w.crossing_count(), 6);
        assert_eq!(w.syllable_count(), 2);
        assert!(BraidWord::empty().is_empty());
    }

    #[test]
    fn inverse_reverses() {
        let w: BraidWord = "b2^2 X b3^-1".parse().unwrap();
        assert_eq!(w.inverse().to_string(), "b3 X^-1 b2^-2");
        assert!(w.then(&w.inverse()).reduced().is_empty());
    }

    #[test]
    fn steps_expand_powers() {
        let w: BraidWord = "b2^-2 X".parse().unwrap();
        let s: Vec<_> = w.steps().collect();
        assert_eq!(s, vec![(Generator::Exchange(2), true), (Generator::Exchange(2), true), (Generator::Wrap, false)]);
    }
}
