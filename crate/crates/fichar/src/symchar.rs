//! Exact character theory of symmetric groups.
//!
//! Irreducible characters are evaluated with the Murnaghan–Nakayama
//! border-strip recursion, memoized process-wide. Class functions carry
//! exact rational values on every conjugacy class of a fixed S_s, so
//! inner products and decompositions into irreducibles are exact.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{LazyLock, Mutex};

use num::{BigInt, BigRational, BigUint, One, Signed, Zero};

use crate::arith::{as_integer, factorial, rat_int, uint_to_int};
use crate::partition::Partition;
use crate::{Error, Result};

/// Cycle counts of a conjugacy class: `counts[j] = m_j`, the number of
/// j-cycles. Equivalent to the cycle-type partition; both directions are
/// lossless.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleCounts {
    counts: BTreeMap<usize, usize>,
}

impl CycleCounts {
    pub fn new(counts: BTreeMap<usize, usize>) -> Self {
        let counts = counts.into_iter().filter(|&(_, m)| m > 0).collect();
        CycleCounts { counts }
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> Self {
        let mut counts = BTreeMap::new();
        for &(j, m) in pairs {
            if m > 0 {
                *counts.entry(j).or_insert(0) += m;
            }
        }
        CycleCounts { counts }
    }

    /// The identity class of S_s: s fixed points.
    pub fn identity(s: usize) -> Self {
        Self::from_pairs(&[(1, s)])
    }

    pub fn from_cycle_type(ct: &Partition) -> Self {
        let mut counts = BTreeMap::new();
        for &part in ct.parts() {
            *counts.entry(part).or_insert(0) += 1;
        }
        CycleCounts { counts }
    }

    pub fn to_cycle_type(&self) -> Partition {
        let mut parts = Vec::new();
        for (&j, &m) in self.counts.iter().rev() {
            parts.extend(std::iter::repeat_n(j, m));
        }
        Partition::new(parts).expect("cycle counts always form a partition")
    }

    /// Σ j·m_j, the rank of the symmetric group the class lives in.
    pub fn degree(&self) -> usize {
        self.counts.iter().map(|(&j, &m)| j * m).sum()
    }

    /// Number of j-cycles (0 when absent).
    pub fn count(&self, j: usize) -> usize {
        self.counts.get(&j).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &BTreeMap<usize, usize> {
        &self.counts
    }

    /// Total number of cycles (including fixed points).
    pub fn num_cycles(&self) -> usize {
        self.counts.values().sum()
    }

    /// (−1)^{s − #cycles}, the sign character at this class.
    pub fn sign(&self) -> i32 {
        if (self.degree() - self.num_cycles()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Centralizer order z = ∏ j^{m_j} · m_j!.
    pub fn centralizer_order(&self) -> BigUint {
        let mut acc = BigUint::one();
        for (&j, &m) in &self.counts {
            acc *= BigUint::from(j).pow(m as u32) * factorial(m);
        }
        acc
    }

    /// Size of the conjugacy class: s! / z.
    pub fn class_size(&self) -> BigUint {
        factorial(self.degree()) / self.centralizer_order()
    }
}

impl fmt::Display for CycleCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_type())
    }
}

// ---------------------------------------------------------------------------
// Murnaghan–Nakayama

type MnKey = (Vec<usize>, Vec<usize>);

// Process-wide memo table; values are pure functions of the key, so
// concurrent fills are benign.
static MN_CACHE: LazyLock<Mutex<HashMap<MnKey, BigInt>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Removes every border strip of length `strip` from λ, returning the
/// remaining shape and the sign (−1)^{height} of the strip.
///
/// Works on beta-numbers b_i = λ_i + (m − i): strips of length k
/// correspond to b_i with b_i − k ≥ 0 not already among the b's; the
/// height is the number of b_j passed over.
fn remove_border_strips(lambda: &Partition, strip: usize) -> Vec<(Partition, i32)> {
    let m = lambda.length();
    let betas: Vec<usize> = (0..m).map(|i| lambda.parts()[i] + (m - 1 - i)).collect();
    let mut out = Vec::new();
    for (i, &b) in betas.iter().enumerate() {
        if b < strip {
            continue;
        }
        let target = b - strip;
        if betas.contains(&target) {
            continue;
        }
        let height = betas.iter().filter(|&&x| target < x && x < b).count();
        let mut next: Vec<usize> = betas.clone();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(k, &bv)| bv - (m - 1 - k))
            .filter(|&p| p > 0)
            .collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        out.push((Partition::new(parts).expect("strip removal preserves shape"), sign));
    }
    out
}

fn mn_recurse(lambda: &Partition, cycles_desc: &[usize]) -> BigInt {
    if lambda.is_empty() {
        return BigInt::one();
    }
    let key: MnKey = (lambda.parts().to_vec(), cycles_desc.to_vec());
    if let Some(hit) = MN_CACHE.lock().unwrap().get(&key) {
        return hit.clone();
    }
    // Strip the largest remaining cycle; keeps recursion depth ≤ #cycles.
    let k = cycles_desc[0];
    let rest = &cycles_desc[1..];
    let mut acc = BigInt::zero();
    for (shape, sign) in remove_border_strips(lambda, k) {
        let sub = mn_recurse(&shape, rest);
        if sign > 0 {
            acc += sub;
        } else {
            acc -= sub;
        }
    }
    MN_CACHE.lock().unwrap().insert(key, acc.clone());
    acc
}

/// χ_λ at the given cycle type, by the Murnaghan–Nakayama rule.
pub fn mn_character(lambda: &Partition, ct: &CycleCounts) -> Result<BigInt> {
    if lambda.size() != ct.degree() {
        return Err(Error::SizeMismatch {
            lambda: lambda.size(),
            degree: ct.degree(),
        });
    }
    let mut cycles: Vec<usize> = ct.to_cycle_type().parts().to_vec();
    cycles.sort_unstable_by(|a, b| b.cmp(a));
    Ok(mn_recurse(lambda, &cycles))
}

/// dim P_λ by the hook length formula. Agrees with χ_λ(identity).
pub fn dim_irr(lambda: &Partition) -> BigUint {
    lambda.hook_dimension()
}

/// Class size s!/∏(j^{m_j} m_j!).
pub fn class_size(ct: &CycleCounts) -> BigUint {
    ct.class_size()
}

// ---------------------------------------------------------------------------
// Class functions

/// An exact-rational-valued function on the conjugacy classes of S_s.
/// Virtual characters are allowed; the keys are always exactly the
/// partitions of s.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    rank: usize,
    values: BTreeMap<Partition, BigRational>,
}

impl ClassFunction {
    pub fn zero(rank: usize) -> Self {
        let values = Partition::enumerate(rank, None, None)
            .into_iter()
            .map(|ct| (ct, BigRational::zero()))
            .collect();
        ClassFunction { rank, values }
    }

    /// Builds a class function from a rule on cycle counts.
    pub fn from_fn(rank: usize, mut f: impl FnMut(&CycleCounts) -> BigRational) -> Self {
        let values = Partition::enumerate(rank, None, None)
            .into_iter()
            .map(|ct| {
                let v = f(&CycleCounts::from_cycle_type(&ct));
                (ct, v)
            })
            .collect();
        ClassFunction { rank, values }
    }

    /// The irreducible character χ_λ.
    pub fn irreducible(lambda: &Partition) -> Self {
        let rank = lambda.size();
        Self::from_fn(rank, |ct| {
            rat_int(mn_character(lambda, ct).expect("sizes match by construction"))
        })
    }

    /// The trivial character of S_s.
    pub fn trivial(rank: usize) -> Self {
        Self::from_fn(rank, |_| BigRational::one())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn value(&self, ct: &CycleCounts) -> BigRational {
        self.values
            .get(&ct.to_cycle_type())
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn classes(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.values.iter()
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.zip_with(other, |a, b| a - b)
    }

    /// Pointwise product — the character of a tensor product.
    pub fn pointwise_mul(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn scale(&self, c: &BigRational) -> ClassFunction {
        ClassFunction {
            rank: self.rank,
            values: self
                .values
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    fn zip_with(
        &self,
        other: &ClassFunction,
        f: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> Result<ClassFunction> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let values = self
            .values
            .iter()
            .map(|(k, v)| (k.clone(), f(v, &other.values[k])))
            .collect();
        Ok(ClassFunction {
            rank: self.rank,
            values,
        })
    }

    /// ⟨f, g⟩ = (1/s!) Σ_classes |class| · f · g. Values are real, so no
    /// conjugation is involved.
    pub fn inner_product(&self, other: &ClassFunction) -> Result<BigRational> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let mut acc = BigRational::zero();
        for (ct, v) in &self.values {
            let w = &other.values[ct];
            if v.is_zero() || w.is_zero() {
                continue;
            }
            let size = CycleCounts::from_cycle_type(ct).class_size();
            acc += v * w * rat_int(uint_to_int(&size));
        }
        Ok(acc / rat_int(uint_to_int(&factorial(self.rank))))
    }

    /// Decomposes the character of an actual module into irreducibles.
    ///
    /// Every multiplicity ⟨f, χ_λ⟩ must be a nonnegative integer;
    /// anything else means the input was virtual or not a character.
    pub fn decompose(&self) -> Result<IrrDecomp> {
        let mut terms = BTreeMap::new();
        for lambda in Partition::enumerate(self.rank, None, None) {
            let chi = ClassFunction::irreducible(&lambda);
            let mult = self.inner_product(&chi)?;
            if mult.is_zero() {
                continue;
            }
            let n = as_integer(&mult).ok_or_else(|| {
                Error::NotACharacter(format!("⟨f, χ_{lambda}⟩ = {mult} is not an integer"))
            })?;
            if n.is_negative() {
                return Err(Error::NotACharacter(format!(
                    "⟨f, χ_{lambda}⟩ = {n} is negative"
                )));
            }
            terms.insert(lambda, n.to_string().parse::<u64>().map_err(|_| {
                Error::NotACharacter(format!("multiplicity {n} does not fit in u64"))
            })?);
        }
        Ok(IrrDecomp {
            rank: self.rank,
            terms,
        })
    }
}

// ---------------------------------------------------------------------------
// Decompositions

/// A multiset of irreducibles of S_s with positive multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrrDecomp {
    rank: usize,
    terms: BTreeMap<Partition, u64>,
}

impl IrrDecomp {
    pub fn empty(rank: usize) -> Self {
        IrrDecomp {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(rank: usize, terms: impl IntoIterator<Item = (Partition, u64)>) -> Self {
        let mut d = IrrDecomp::empty(rank);
        for (p, m) in terms {
            d.add_term(p, m);
        }
        d
    }

    pub fn add_term(&mut self, lambda: Partition, mult: u64) {
        debug_assert_eq!(lambda.size(), self.rank);
        if mult > 0 {
            *self.terms.entry(lambda).or_insert(0) += mult;
        }
    }

    pub fn add_scaled(&mut self, other: &IrrDecomp, scale: u64) {
        for (p, &m) in &other.terms {
            self.add_term(p.clone(), m * scale);
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiplicity(&self, lambda: &Partition) -> u64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    /// Terms in decreasing lexicographic order of the partition.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.terms.iter().rev().map(|(p, &m)| (p, m))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Σ mult · dim P_λ.
    pub fn total_dimension(&self) -> BigUint {
        let mut acc = BigUint::zero();
        for (p, &m) in &self.terms {
            acc += dim_irr(p) * BigUint::from(m);
        }
        acc
    }

    /// The character of the represented module.
    pub fn character(&self) -> ClassFunction {
        let mut acc = ClassFunction::zero(self.rank);
        for (p, &m) in &self.terms {
            let chi = ClassFunction::irreducible(p).scale(&rat_int(m));
            acc = acc.add(&chi).expect("ranks equal by construction");
        }
        acc
    }

    /// JSON map `{"[3,1]": 1, …}` with a rank field.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (p, m) in self.terms() {
            map.insert(p.to_string(), serde_json::json!(m));
        }
        serde_json::json!({ "rank": self.rank, "terms": map })
    }
}

impl fmt::Display for IrrDecomp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (p, m)) in self.terms().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if m != 1 {
                write!(f, "{m}·")?;
            }
            write!(f, "P{p}")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Character tables

/// The full character table of S_s, rows indexed by λ, columns by cycle
/// type, both in decreasing lexicographic order.
pub struct CharacterTable {
    rank: usize,
    classes: Vec<Partition>,
    rows: Vec<(Partition, Vec<BigInt>)>,
}

impl CharacterTable {
    pub fn new(rank: usize) -> Self {
        let classes = Partition::enumerate(rank, None, None);
        let rows = Partition::enumerate(rank, None, None)
            .into_iter()
            .map(|lambda| {
                let row = classes
                    .iter()
                    .map(|ct| {
                        mn_character(&lambda, &CycleCounts::from_cycle_type(ct))
                            .expect("sizes agree")
                    })
                    .collect();
                (lambda, row)
            })
            .collect();
        CharacterTable {
            rank,
            classes,
            rows,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn classes(&self) -> &[Partition] {
        &self.classes
    }

    pub fn rows(&self) -> &[(Partition, Vec<BigInt>)] {
        &self.rows
    }

    /// `{rank, classes: [partition], table: {lambda: [values]}}`
    pub fn to_json(&self) -> serde_json::Value {
        let classes: Vec<String> = self.classes.iter().map(|c| c.to_string()).collect();
        let mut table = serde_json::Map::new();
        for (lambda, row) in &self.rows {
            let vals: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            table.insert(lambda.to_string(), serde_json::json!(vals));
        }
        serde_json::json!({ "rank": self.rank, "classes": classes, "table": table })
    }
}
