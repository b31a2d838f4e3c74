use std::cmp::Ordering;
use std::collections::HashMap;

use anyon_data::linalg::CMat;
use anyon_data::{Label, ModelParams};
use braid_engine::{BraidEngine, BraidWord, Generator, Letter};
use nalgebra::{Matrix2, Matrix4};
use num_complex::Complex;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::protocol::psi_leaves;
use crate::GateError;

type M4 = Matrix4<Complex<f64>>;
type M2 = Matrix2<Complex<f64>>;

/// Norms closer than this are ranked as equal.
const RANK_TOL: f64 = 1e-12;
/// Largest entry of U - I on the vacuum channel for a word to count as control preserving.
const VACUUM_TOL: f64 = 1e-9;

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Maximal number of syllables (generator powers) per word.
    pub max_len: usize,
    pub threshold: f64,
    /// Largest |power| of a syllable.
    pub max_power: i32,
    /// Also use the half exchange h1 where the labels allow it.
    pub include_half: bool,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Keep only this many best hits.
    pub limit: Option<usize>,
    /// Only report words acting trivially when the control channel is the vacuum.
    pub control_preserving: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { max_len: 11, threshold: 0.3, max_power: 2, include_half: false, jobs: None, limit: Some(100), control_preserving: false }
    }
}

#[derive(Clone, Debug)]
pub struct SearchHit {
    pub word: BraidWord,
    pub su2: f64,
    pub su11: f64,
    pub syllables: usize,
    pub crossings: usize,
    /// max |U - I| of the same word on the vacuum control channel.
    pub vacuum_defect: f64,
}

impl SearchHit {
    pub fn max_norm(&self) -> f64 {
        self.su2.max(self.su11)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "word": self.word.to_string(),
            "su2": self.su2,
            "su11": self.su11,
            "syllables": self.syllables,
            "len": self.crossings,
            "vacuum_defect": self.vacuum_defect,
        })
    }
}

#[derive(Clone)]
struct Candidate {
    syllables: Vec<(usize, i32)>,
    su2: f64,
    su11: f64,
    crossings: usize,
    vacuum_defect: f64,
}

impl Candidate {
    fn rank(&self, other: &Self, gens: &[Generator]) -> Ordering {
        let (a, b) = (self.su2.max(self.su11), other.su2.max(other.su11));
        let by_norm = if (a - b).abs() <= RANK_TOL * a.max(b) { Ordering::Equal } else { a.total_cmp(&b) };
        by_norm
            .then(self.syllables.len().cmp(&other.syllables.len()))
            .then(self.crossings.cmp(&other.crossings))
            .then((self.vacuum_defect > VACUUM_TOL).cmp(&(other.vacuum_defect > VACUUM_TOL)))
            .then_with(|| word_of(&self.syllables, gens).to_string().cmp(&word_of(&other.syllables, gens).to_string()))
    }
}

fn word_of(syllables: &[(usize, i32)], gens: &[Generator]) -> BraidWord {
    BraidWord::new(syllables.iter().map(|&(g, p)| Letter::new(gens[g], p)).collect())
}

/// Target labelling, psi-sector matrix and vacuum-channel matrix of one step.
type Edge = (usize, M4, M2);

/// Transition table over the labellings reachable from the psi sector.
struct Table {
    gens: Vec<Generator>,
    powers: Vec<i32>,
    /// next[state][gen][power index] = (state, psi-sector matrix, vacuum-channel matrix)
    next: Vec<Vec<Vec<Option<Edge>>>>,
}

fn to_m4(m: &CMat) -> Option<M4> {
    (m.shape() == (4, 4)).then(|| M4::from_fn(|i, j| m[(i, j)]))
}

fn to_m2(m: &CMat) -> Option<M2> {
    (m.shape() == (2, 2)).then(|| M2::from_fn(|i, j| m[(i, j)]))
}

fn vacuum_version(leaves: &[Label]) -> Vec<Label> {
    leaves.iter().map(|&l| if l == Label::Psi { Label::Vacuum } else { l }).collect()
}

impl Table {
    fn build(engine: &BraidEngine, cfg: &SearchConfig) -> Result<Self, GateError> {
        let mut gens = vec![Generator::Wrap, Generator::Exchange(2)];
        if cfg.include_half {
            gens.push(Generator::Half);
        }
        let powers: Vec<i32> = (-cfg.max_power..=cfg.max_power).filter(|&p| p != 0).collect();
        let mut states = vec![psi_leaves()];
        let mut next = Vec::new();
        let mut s = 0;
        while s < states.len() {
            let mut row = Vec::new();
            for &g in &gens {
                let mut cell = Vec::new();
                for &p in &powers {
                    let word = BraidWord::single(g, p);
                    let psi = engine.evaluate_map(&word, &states[s], Label::ALPHA).ok();
                    let vac = engine.evaluate_map(&word, &vacuum_version(&states[s]), Label::ALPHA).ok();
                    let entry = psi.zip(vac).and_then(|(m, v)| {
                        let (m4, m2) = (to_m4(&m.matrix)?, to_m2(&v.matrix)?);
                        let to = m.to.leaves.clone();
                        let id = match states.iter().position(|x| *x == to) {
                            Some(i) => i,
                            None => {
                                states.push(to);
                                states.len() - 1
                            }
                        };
                        Some((id, m4, m2))
                    });
                    cell.push(entry);
                }
                row.push(cell);
            }
            next.push(row);
            s += 1;
        }
        Ok(Table { gens, powers, next })
    }
}

/// Projective class of a psi-sector matrix, for merging words equal up to a global phase.
fn class_key(m: &M4) -> [i64; 32] {
    let pivot = m.iter().find(|z| z.norm() > 0.1).copied().unwrap_or(Complex::new(1.0, 0.0));
    let phase = pivot.conj() / pivot.norm();
    let mut key = [0i64; 32];
    // column-major iteration order is fixed by nalgebra
    for (i, z) in m.iter().enumerate() {
        let w = z * phase;
        key[2 * i] = (w.re * 1e8).round() as i64;
        key[2 * i + 1] = (w.im * 1e8).round() as i64;
    }
    key
}

struct Walker<'a> {
    table: &'a Table,
    cfg: &'a SearchConfig,
    found: HashMap<[i64; 32], Candidate>,
}

impl Walker<'_> {
    fn visit(&mut self, m: &M4, v: &M2, state: usize, syllables: &mut Vec<(usize, i32)>, crossings: usize) {
        if state == 0 {
            let su11 = m[(0, 1)].norm();
            let su2 = m[(2, 3)].norm();
            let diagonal = su11 < 1e-9 && su2 < 1e-9;
            let vacuum_defect = (v - M2::identity()).iter().map(|z| z.norm()).fold(0.0, f64::max);
            let wanted = !self.cfg.control_preserving || vacuum_defect < VACUUM_TOL;
            if !diagonal && wanted && su11.max(su2) < self.cfg.threshold {
                let cand = Candidate { syllables: syllables.clone(), su2, su11, crossings, vacuum_defect };
                let gens = &self.table.gens;
                self.found
                    .entry(class_key(m))
                    .and_modify(|c| {
                        if cand.rank(c, gens) == Ordering::Less {
                            *c = cand.clone();
                        }
                    })
                    .or_insert(cand);
            }
        }
        if syllables.len() == self.cfg.max_len {
            return;
        }
        let last = syllables.last().map(|&(g, _)| g);
        for g in 0..self.table.gens.len() {
            if Some(g) == last {
                continue;
            }
            for (pi, &p) in self.table.powers.iter().enumerate() {
                let Some((to, step, vstep)) = &self.table.next[state][g][pi] else { continue };
                let next = step * m;
                let vnext = vstep * v;
                syllables.push((g, p));
                self.visit(&next, &vnext, *to, syllables, crossings + p.unsigned_abs() as usize);
                syllables.pop();
            }
        }
    }
}

fn merge(mut a: HashMap<[i64; 32], Candidate>, b: HashMap<[i64; 32], Candidate>, gens: &[Generator]) -> HashMap<[i64; 32], Candidate> {
    for (k, c) in b {
        match a.get(&k) {
            Some(old) if old.rank(&c, gens) != Ordering::Greater => {}
            _ => {
                a.insert(k, c);
            }
        }
    }
    a
}

/// Exhaustive search over reduced words on the psi sector whose leakage norms are both
/// below `threshold`, ranked by the larger norm, then syllable and crossing counts.
/// Words that are diagonal (no leakage at all) are not reported.
pub fn search_low_leakage(params: &ModelParams, cfg: &SearchConfig) -> Result<Vec<SearchHit>, GateError> {
    let engine = BraidEngine::new(params.clone());
    let table = Table::build(&engine, cfg)?;
    // Work items: every word of at most two syllables seeds one subtree.
    let mut prefixes: Vec<Vec<(usize, i32)>> = vec![];
    for g in 0..table.gens.len() {
        for &p in &table.powers {
            prefixes.push(vec![(g, p)]);
        }
    }
    let run = || {
        let roots: HashMap<[i64; 32], Candidate> = prefixes
            .par_iter()
            .filter(|_| cfg.max_len > 0)
            .fold(HashMap::new, |acc, prefix| {
                let mut w = Walker { table: &table, cfg, found: acc };
                let (g, p) = prefix[0];
                let pi = table.powers.iter().position(|&x| x == p).expect("power in table");
                if let Some((to, step, vstep)) = &table.next[0][g][pi] {
                    let mut syl = prefix.clone();
                    w.visit(step, vstep, *to, &mut syl, p.unsigned_abs() as usize);
                }
                w.found
            })
            .reduce(HashMap::new, |a, b| merge(a, b, &table.gens));
        roots
    };
    let found = match cfg.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| GateError::ShapeMismatch(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    };
    let mut cands: Vec<Candidate> = found.into_values().collect();
    cands.sort_by(|a, b| a.rank(b, &table.gens));
    if let Some(limit) = cfg.limit {
        cands.truncate(limit);
    }
    Ok(cands
        .into_iter()
        .map(|c| SearchHit {
            word: word_of(&c.syllables, &table.gens),
            syllables: c.syllables.len(),
            crossings: c.crossings,
            su2: c.su2,
            su11: c.su11,
            vacuum_defect: c.vacuum_defect,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params() -> ModelParams {
        ModelParams::parse("12/5").unwrap()
    }

    #[test]
    fn zero_threshold_is_empty() {
        let cfg = SearchConfig { max_len: 4, threshold: 0.0, ..SearchConfig::default() };
        assert!(search_low_leakage(&params(), &cfg).unwrap().is_empty());
    }

    #[test]
    fn results_are_ranked_and_closed() {
        let cfg = SearchConfig { max_len: 5, threshold: 0.95, limit: None, ..SearchConfig::default() };
        let hits = search_low_leakage(&params(), &cfg).unwrap();
        assert!(!hits.is_empty());
        for pair in hits.windows(2) {
            assert!(pair[0].max_norm() <= pair[1].max_norm() * (1.0 + RANK_TOL));
        }
        let engine = BraidEngine::new(params());
        for h in hits.iter().take(5) {
            let m = crate::protocol::evaluate_psi(&engine, &h.word).unwrap().matrix;
            assert!((m[(0, 1)].norm() - h.su11).abs() < 1e-12);
            assert!((m[(2, 3)].norm() - h.su2).abs() < 1e-12);
        }
    }

    #[test]
    fn control_preserving_filter() {
        let cfg = SearchConfig { max_len: 5, threshold: 0.95, limit: None, control_preserving: true, ..SearchConfig::default() };
        let hits = search_low_leakage(&params(), &cfg).unwrap();
        assert!(hits.iter().any(|h| h.word.to_string() == "b2^2 X b2^2 X b2^-2"));
        let engine = BraidEngine::new(params());
        for h in &hits {
            assert!(h.vacuum_defect < VACUUM_TOL);
            let v = crate::protocol::evaluate_vacuum(&engine, &h.word).unwrap().matrix;
            assert!(anyon_data::linalg::max_diff(&v, &anyon_data::linalg::identity(2)) < VACUUM_TOL);
        }
    }

    #[test]
    fn projective_duplicates_are_merged() {
        let m = M4::from_fn(|i, j| Complex::new((i + 2 * j) as f64 * 0.1, 0.3));
        let phase = Complex::from_polar(1.0, 0.77);
        assert_eq!(class_key(&m), class_key(&(m * phase)));
    }
}
