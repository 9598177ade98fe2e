//! Induction products of symmetric-group modules.
//!
//! The product P ∘ Q = Ind_{S_a×S_b}^{S_{a+b}} P ⊗ Q is computed two
//! independent ways: multiplicities by Littlewood–Richardson tableau
//! enumeration (the fast path) and characters by the splitting sum over
//! sub-multisets of the cycle multiset (the oracle the tests compare
//! against). The Pieri special case evaluates the free FI-module M(λ),
//! and wedge-power characters feed the E₂-page analysis.

use num::{BigInt, BigRational, BigUint, One, Zero};

use crate::arith::{rat_int, uint_to_int};
use crate::partition::Partition;
use crate::symchar::{ClassFunction, CycleCounts, IrrDecomp};
use crate::Result;

/// Record of one induction product P_λ ∘ P_μ with its decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InductionProduct {
    pub left: Partition,
    pub right: Partition,
    pub result: IrrDecomp,
}

impl InductionProduct {
    pub fn new(left: Partition, right: Partition) -> Self {
        let result = lr_coefficients(&left, &right);
        InductionProduct {
            left,
            right,
            result,
        }
    }

    /// binom(a+b, a) · dim P_λ · dim P_μ.
    pub fn expected_dimension(&self) -> BigUint {
        crate::arith::binomial(self.left.size() + self.right.size(), self.left.size())
            * self.left.hook_dimension()
            * self.right.hook_dimension()
    }
}

// ---------------------------------------------------------------------------
// Littlewood–Richardson by tableau enumeration

/// Decomposition of P_λ ∘ P_μ into irreducibles of S_{|λ|+|μ|}.
///
/// c^ν_{λμ} counts skew semistandard tableaux of shape ν/λ and content μ
/// whose reverse reading word is a lattice word.
pub fn lr_coefficients(lambda: &Partition, mu: &Partition) -> IrrDecomp {
    let total = lambda.size() + mu.size();
    let mut out = IrrDecomp::empty(total);
    for nu in Partition::enumerate(total, None, None) {
        if !nu.contains(lambda) {
            continue;
        }
        let count = lr_count(&nu, lambda, mu);
        if count > 0 {
            out.add_term(nu, count);
        }
    }
    out
}

/// Number of LR fillings of ν/λ with content μ.
fn lr_count(nu: &Partition, lambda: &Partition, mu: &Partition) -> u64 {
    // Cells of the skew shape in reverse reading order: rows top to
    // bottom, each row right to left. The ballot condition is then a
    // prefix condition checkable as we fill.
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for i in 1..=nu.length() {
        let lo = lambda.part(i);
        let hi = nu.part(i);
        for j in (lo + 1..=hi).rev() {
            cells.push((i, j));
        }
    }
    if cells.len() != mu.size() {
        return 0;
    }
    let mut filling: Vec<Vec<usize>> = (0..=nu.length())
        .map(|i| vec![0; nu.part(i) + 2])
        .collect();
    let mut remaining: Vec<usize> = mu.parts().to_vec();
    let mut counts: Vec<usize> = vec![0; mu.length()];
    fill(&cells, 0, lambda, &mut filling, &mut remaining, &mut counts)
}

fn fill(
    cells: &[(usize, usize)],
    at: usize,
    lambda: &Partition,
    filling: &mut Vec<Vec<usize>>,
    remaining: &mut Vec<usize>,
    counts: &mut Vec<usize>,
) -> u64 {
    if at == cells.len() {
        return if remaining.iter().all(|&r| r == 0) { 1 } else { 0 };
    }
    let (i, j) = cells[at];
    let mut total = 0;
    for v in 1..=remaining.len() {
        if remaining[v - 1] == 0 {
            continue;
        }
        // ballot: value v−1 must already have occurred more often than v
        if v > 1 && counts[v - 1] >= counts[v - 2] {
            continue;
        }
        // row weakly increases left→right: right neighbor was filled first
        let right = filling[i][j + 1];
        if right != 0 && v > right {
            continue;
        }
        // column strictly increases downward, when the cell above is in
        // the skew shape (cells of λ impose nothing)
        if i > 1 && j > lambda.part(i - 1) {
            let above = filling[i - 1][j];
            if above != 0 && v <= above {
                continue;
            }
        }
        filling[i][j] = v;
        remaining[v - 1] -= 1;
        counts[v - 1] += 1;
        total += fill(cells, at + 1, lambda, filling, remaining, counts);
        counts[v - 1] -= 1;
        remaining[v - 1] += 1;
        filling[i][j] = 0;
    }
    total
}

// ---------------------------------------------------------------------------
// Induced characters by cycle splitting

/// Character of Ind_{S_a×S_b}^{S_{a+b}} of a pair of class functions.
///
/// At a class c with m_j j-cycles the value is the sum over splittings
/// of the cycle multiset into a degree-a part α and degree-b part β of
/// ∏_j binom(m_j, k_j) · f(α) · g(β).
pub fn induce(f: &ClassFunction, g: &ClassFunction) -> ClassFunction {
    let a = f.rank();
    let total = a + g.rank();
    ClassFunction::from_fn(total, |ct| {
        let entries: Vec<(usize, usize)> = ct.counts().iter().map(|(&j, &m)| (j, m)).collect();
        let mut acc = BigRational::zero();
        split_sum(
            &entries,
            0,
            a,
            BigUint::one(),
            &mut Vec::new(),
            &mut |chosen, multiplier| {
                let alpha = CycleCounts::from_pairs(chosen);
                let beta_pairs: Vec<(usize, usize)> = entries
                    .iter()
                    .zip(chosen.iter())
                    .map(|(&(j, m), &(_, k))| (j, m - k))
                    .collect();
                let beta = CycleCounts::from_pairs(&beta_pairs);
                acc += f.value(&alpha) * g.value(&beta) * rat_int(uint_to_int(multiplier));
            },
        );
        acc
    })
}

/// Walks every sub-multiset of the cycle multiset with total degree
/// `budget`, carrying ∏ binom(m_j, k_j).
fn split_sum(
    entries: &[(usize, usize)],
    idx: usize,
    budget: usize,
    multiplier: BigUint,
    chosen: &mut Vec<(usize, usize)>,
    emit: &mut impl FnMut(&[(usize, usize)], &BigUint),
) {
    if idx == entries.len() {
        if budget == 0 {
            emit(chosen, &multiplier);
        }
        return;
    }
    let (j, m) = entries[idx];
    for k in 0..=m.min(budget / j) {
        chosen.push((j, k));
        let mult = multiplier.clone() * crate::arith::binomial(m, k);
        split_sum(entries, idx + 1, budget - j * k, mult, chosen, emit);
        chosen.pop();
    }
}

/// Character of P_λ ∘ P_μ — the oracle the tableau method is checked
/// against.
pub fn induced_character(lambda: &Partition, mu: &Partition) -> ClassFunction {
    induce(
        &ClassFunction::irreducible(lambda),
        &ClassFunction::irreducible(mu),
    )
}

/// Decomposition of P_λ ∘ P_μ by the character method, exposed for
/// cross-validation against [`lr_coefficients`].
pub fn lr_by_characters(lambda: &Partition, mu: &Partition) -> Result<IrrDecomp> {
    induced_character(lambda, mu).decompose()
}

// ---------------------------------------------------------------------------
// Pieri rule and wedge powers

/// M(λ) evaluated at a set of size s: P_λ ∘ P_(s−|λ|), decomposed by the
/// Pieri rule — one copy of P_μ for each μ ⊇ λ with μ/λ a horizontal
/// strip. Empty (the zero module) when s < |λ|.
pub fn m_lambda_at(lambda: &Partition, s: usize) -> IrrDecomp {
    let mut out = IrrDecomp::empty(s);
    if s < lambda.size() {
        return out;
    }
    // Interlacing μ₁ ≥ λ₁ ≥ μ₂ ≥ λ₂ ≥ … with Σμ = s; at most one extra row.
    let rows = lambda.length() + 1;
    fn rec(
        lambda: &Partition,
        row: usize,
        rows: usize,
        left: usize,
        mu: &mut Vec<usize>,
        out: &mut IrrDecomp,
    ) {
        if row > rows {
            if left == 0 {
                let parts: Vec<usize> = mu.iter().copied().filter(|&p| p > 0).collect();
                out.add_term(Partition::new(parts).expect("interlacing keeps order"), 1);
            }
            return;
        }
        let lo = lambda.part(row);
        // rows below must still fit their λ parts
        let tail: usize = (row + 1..=rows).map(|r| lambda.part(r)).sum();
        let cap = if row == 1 { left } else { lambda.part(row - 1) };
        let hi = left.saturating_sub(tail).min(cap);
        for v in lo..=hi {
            mu.push(v);
            rec(lambda, row + 1, rows, left - v, mu, out);
            mu.pop();
        }
    }
    rec(lambda, 1, rows, s, &mut Vec::with_capacity(rows), &mut out);
    out
}

/// Character of the S_s-module (𝕜^n)^{∧q} ∘ P_(s−q).
///
/// The S_q-character of V^{⊗q} twisted by sign is sign(σ)·n^{#cycles(σ)};
/// the result is induced up with the trivial module of S_{s−q}.
pub fn wedge_power_character(n: usize, q: usize, s: usize) -> ClassFunction {
    assert!(q <= s, "wedge degree q = {q} exceeds s = {s}");
    let wedge_q = ClassFunction::from_fn(q, |ct| {
        let value = BigInt::from(n).pow(ct.num_cycles() as u32) * BigInt::from(ct.sign());
        rat_int(value)
    });
    induce(&wedge_q, &ClassFunction::trivial(s - q))
}

/// Dimension of the Schur functor 𝕊_λ applied to an n-dimensional space,
/// by the content/hook formula ∏(n + j − i)/hook(i,j); zero when λ has
/// more than n rows.
pub fn schur_dim(lambda: &Partition, n: usize) -> BigUint {
    if lambda.length() > n {
        return BigUint::zero();
    }
    let hooks = lambda.hook_lengths();
    let mut numer = BigUint::one();
    let mut denom = BigUint::one();
    for (i, row) in hooks.iter().enumerate() {
        for (j, &hook) in row.iter().enumerate() {
            // content j − i in 0-based cell coordinates; i < n ≤ n + j
            numer *= BigUint::from(n + j - i);
            denom *= BigUint::from(hook);
        }
    }
    numer / denom
}
