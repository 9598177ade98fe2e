//! Character polynomials in the cycle-count variables X_1, X_2, ….
//!
//! X_j(σ) counts the j-cycles of σ and carries graded degree j. A
//! finitely generated FI-module eventually has its character computed by
//! a single such polynomial; for the irreducible family P(λ) the stable
//! polynomial f_λ is unique of graded degree ≤ |λ| and valid for all
//! s ≥ |λ| + λ₁.
//!
//! Internally everything lives in the expanded monomial basis, which is
//! the canonical form for equality; the falling-factorial products
//! (X_i)_j customary in print are a view, convertible both ways without
//! loss.
//!
//! f_λ is constructed by exact interpolation: one linear constraint per
//! basis monomial, anchored deep enough in the stable range that the
//! Murnaghan–Nakayama values of the padded characters pin the polynomial
//! down, solved over the rationals with no rounding anywhere.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::arith::{as_integer, binomial, rat_int, uint_to_int};
use crate::partition::Partition;
use crate::symchar::{mn_character, CycleCounts};
use crate::{Error, Result};

/// Exponent vector (e_1, …, e_d) for X_1^{e_1}⋯X_d^{e_d}; trailing zeros
/// trimmed, so the constant monomial is the empty vector.
type Monomial = Vec<usize>;

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

fn graded_deg(m: &[usize]) -> usize {
    m.iter().enumerate().map(|(k, &e)| (k + 1) * e).sum()
}

/// A polynomial over ℚ in the variables X_1, X_2, … with deg X_j = j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPolynomial {
    coeffs: BTreeMap<Monomial, BigRational>,
}

impl CharPolynomial {
    pub fn zero() -> Self {
        CharPolynomial {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(Vec::new(), c);
        }
        CharPolynomial { coeffs }
    }

    /// The variable X_j (1-based).
    pub fn var(j: usize) -> Self {
        assert!(j >= 1, "variables are X_1, X_2, …");
        let mut exps = vec![0; j];
        exps[j - 1] = 1;
        let mut coeffs = BTreeMap::new();
        coeffs.insert(exps, BigRational::one());
        CharPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Graded degree with deg X_j = j; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.keys().map(|m| graded_deg(m)).max().unwrap_or(0)
    }

    /// Largest variable index that occurs.
    pub fn num_vars(&self) -> usize {
        self.coeffs.keys().map(|m| m.len()).max().unwrap_or(0)
    }

    pub fn coefficient(&self, exps: &[usize]) -> BigRational {
        self.coeffs
            .get(&trim(exps.to_vec()))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn monomials(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.coeffs.iter()
    }

    fn insert(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(trim(m)) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &CharPolynomial) -> CharPolynomial {
        let mut out = self.clone();
        for (m, c) in &other.coeffs {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &CharPolynomial) -> CharPolynomial {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> CharPolynomial {
        if c.is_zero() {
            return CharPolynomial::zero();
        }
        CharPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &CharPolynomial) -> CharPolynomial {
        let mut out = CharPolynomial::zero();
        for (m1, c1) in &self.coeffs {
            for (m2, c2) in &other.coeffs {
                let mut m = vec![0; m1.len().max(m2.len())];
                for (k, &e) in m1.iter().enumerate() {
                    m[k] += e;
                }
                for (k, &e) in m2.iter().enumerate() {
                    m[k] += e;
                }
                out.insert(m, c1 * c2);
            }
        }
        out
    }

    /// Substitutes X_j = m_j and evaluates exactly. Variables absent from
    /// the polynomial are ignored; variables beyond the cycle data read 0.
    pub fn evaluate(&self, ct: &CycleCounts) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.coeffs {
            let mut term = c.clone();
            for (k, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let x = BigInt::from(ct.count(k + 1));
                if x.is_zero() {
                    term = BigRational::zero();
                    break;
                }
                term *= rat_int(x.pow(e as u32));
            }
            acc += term;
        }
        acc
    }

    // -- falling-factorial view ---------------------------------------------

    /// Builds a polynomial from a sum of falling-factorial products.
    pub fn from_falling_terms(terms: &[FallingTerm]) -> CharPolynomial {
        let mut out = CharPolynomial::zero();
        for term in terms {
            let mut prod = CharPolynomial::constant(term.coeff.clone());
            for &(var, depth) in &term.factors {
                prod = prod.mul(&falling_poly(var, depth));
            }
            out = out.add(&prod);
        }
        out
    }

    /// Coefficients in the basis of per-variable falling-factorial
    /// products ∏_i (X_i)_{e_i}. Lossless: expanding the result recovers
    /// the polynomial.
    pub fn falling_basis(&self) -> BTreeMap<Monomial, BigRational> {
        let mut rest = self.clone();
        let mut out = BTreeMap::new();
        while let Some(m) = rest
            .coeffs
            .keys()
            .max_by_key(|m| (graded_deg(m), (*m).clone()))
            .cloned()
        {
            let c = rest.coeffs[&m].clone();
            let mut prod = CharPolynomial::one();
            for (k, &e) in m.iter().enumerate() {
                if e > 0 {
                    prod = prod.mul(&falling_poly(k + 1, e));
                }
            }
            rest = rest.sub(&prod.scale(&c));
            out.insert(m, c);
        }
        out
    }

    /// Renders in the falling-factorial display basis, e.g.
    /// `1/12*(X1)_4 + (X2)_2 - X1*X3`.
    pub fn render_falling_factorials(&self) -> String {
        let basis = self.falling_basis();
        if basis.is_empty() {
            return "0".to_string();
        }
        // Non-constant terms by (largest variable, then graded degree
        // descending, then exponents descending); the constant last.
        let mut terms: Vec<(&Monomial, &BigRational)> = basis.iter().collect();
        terms.sort_by(|(m1, _), (m2, _)| {
            let key = |m: &Monomial| (m.is_empty(), m.len(), std::cmp::Reverse(graded_deg(m)));
            key(m1).cmp(&key(m2)).then_with(|| m2.cmp(m1))
        });
        let mut out = String::new();
        for (k, (m, c)) in terms.iter().enumerate() {
            let mag = c.abs();
            let sign = c.is_negative();
            if k == 0 {
                if sign {
                    out.push('-');
                }
            } else {
                out.push_str(if sign { " - " } else { " + " });
            }
            let factors: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(idx, &e)| {
                    if e == 1 {
                        format!("X{}", idx + 1)
                    } else {
                        format!("(X{})_{}", idx + 1, e)
                    }
                })
                .collect();
            if factors.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }

    /// Substitutes X_1 = s and X_j = 0 for j ≥ 2.
    pub fn dimension_polynomial(&self) -> DimensionPolynomial {
        let deg = self
            .coeffs
            .keys()
            .filter(|m| m.len() <= 1)
            .map(|m| m.first().copied().unwrap_or(0))
            .max()
            .unwrap_or(0);
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        for (m, c) in &self.coeffs {
            if m.len() <= 1 {
                coeffs[m.first().copied().unwrap_or(0)] += c;
            }
        }
        DimensionPolynomial::new(coeffs)
    }

    /// `{monomials: [{exps: […], coeff: "p/q"}]}`
    pub fn to_json(&self) -> serde_json::Value {
        let monomials: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .map(|(m, c)| serde_json::json!({ "exps": m, "coeff": c.to_string() }))
            .collect();
        serde_json::json!({ "monomials": monomials })
    }
}

/// One summand coeff · ∏ (X_var)_depth of a falling-factorial expression.
#[derive(Debug, Clone)]
pub struct FallingTerm {
    pub coeff: BigRational,
    pub factors: Vec<(usize, usize)>,
}

impl FallingTerm {
    pub fn new(coeff: BigRational, factors: Vec<(usize, usize)>) -> Self {
        FallingTerm { coeff, factors }
    }
}

/// (X_j)_k = X_j(X_j − 1)⋯(X_j − k + 1) as a polynomial.
fn falling_poly(j: usize, k: usize) -> CharPolynomial {
    let mut prod = CharPolynomial::one();
    let x = CharPolynomial::var(j);
    for t in 0..k {
        prod = prod.mul(&x.sub(&CharPolynomial::constant(rat_int(t as i64))));
    }
    prod
}

/// binom(X_j, k) = (X_j)_k / k!.
fn binom_poly(j: usize, k: usize) -> CharPolynomial {
    falling_poly(j, k).scale(&BigRational::new(
        BigInt::one(),
        uint_to_int(&crate::arith::factorial(k)),
    ))
}

impl fmt::Display for CharPolynomial {
    /// Expanded monomial form, highest graded degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Monomial, &BigRational)> = self.coeffs.iter().collect();
        terms.sort_by(|(m1, _), (m2, _)| {
            graded_deg(m2)
                .cmp(&graded_deg(m1))
                .then_with(|| m2.cmp(m1))
        });
        for (k, (m, c)) in terms.iter().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            }
            let vars: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(idx, &e)| {
                    if e == 1 {
                        format!("X{}", idx + 1)
                    } else {
                        format!("X{}^{}", idx + 1, e)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, vars.join("*"))?;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Univariate dimension polynomials

/// A univariate polynomial in s, the restriction of a character
/// polynomial to the identity classes (X_1 = s, X_j = 0 for j ≥ 2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionPolynomial {
    coeffs: Vec<BigRational>,
}

impl DimensionPolynomial {
    fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DimensionPolynomial { coeffs }
    }

    /// Coefficients in ascending order of the power of s.
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn evaluate(&self, s: usize) -> BigRational {
        let x = rat_int(s as i64);
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl fmt::Display for DimensionPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            }
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if e == 1 {
                        write!(f, "s")?;
                    } else {
                        write!(f, "s^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Construction of f_λ

/// The unique character polynomial of graded degree ≤ |λ| computing the
/// character of P(λ)_s for every s ≥ |λ| + λ₁.
///
/// Construction is exact linear interpolation. The basis is every
/// product ∏_j binom(X_j, m_j) with Σ j·m_j ≤ d = |λ|. For each tail
/// (m_2, …, m_d) of total degree t and each a = 0, …, d−t there is one
/// constraint: the value at the class of S_{N₀+a} with m_j j-cycles and
/// N₀+a−t fixed points must equal the Murnaghan–Nakayama value of the
/// padded character χ_{λ[N₀+a]} there, with anchor N₀ = |λ| + λ₁ + d.
/// The system is square and (block-triangularly) unisolvent.
pub fn build_f_lambda(lambda: &Partition) -> Result<CharPolynomial> {
    let d = lambda.size();
    build_f_lambda_anchored(lambda, lambda.size() + lambda.first() + d)
}

/// The same interpolation with an explicit anchor rank; any anchor with
/// N₀ ≥ |λ| + λ₁ yields the same polynomial.
pub(crate) fn build_f_lambda_anchored(
    lambda: &Partition,
    anchor: usize,
) -> Result<CharPolynomial> {
    let d = lambda.size();
    if d == 0 {
        return Ok(CharPolynomial::one());
    }
    debug_assert!(anchor >= lambda.size() + lambda.first());

    // Basis exponents (m_1, …, m_d) with Σ j·m_j ≤ d, tails first.
    let tails = enumerate_tails(d);
    let mut basis: Vec<Vec<usize>> = Vec::new();
    for tail in &tails {
        let t = tail_degree(tail);
        for m1 in 0..=(d - t) {
            let mut m = vec![m1];
            m.extend_from_slice(tail);
            basis.push(m);
        }
    }

    // One equation per (tail, a): row of binomial evaluations = MN value.
    let mut matrix: Vec<Vec<BigRational>> = Vec::with_capacity(basis.len());
    let mut rhs: Vec<BigRational> = Vec::with_capacity(basis.len());
    for tail in &tails {
        let t = tail_degree(tail);
        for a in 0..=(d - t) {
            let s = anchor + a;
            let mut pairs: Vec<(usize, usize)> = vec![(1, s - t)];
            for (k, &m) in tail.iter().enumerate() {
                pairs.push((k + 2, m));
            }
            let class = CycleCounts::from_pairs(&pairs);
            let padded = lambda.pad(s).expect("anchor is inside the stable range");
            rhs.push(rat_int(mn_character(&padded.as_partition(), &class)?));
            matrix.push(
                basis
                    .iter()
                    .map(|m| eval_binom_basis(m, &class))
                    .collect(),
            );
        }
    }

    let solution = solve_exact(matrix, rhs)
        .ok_or_else(|| Error::InterpolationSingular(lambda.to_string()))?;

    let mut f = CharPolynomial::zero();
    for (m, c) in basis.iter().zip(solution) {
        if c.is_zero() {
            continue;
        }
        let mut prod = CharPolynomial::one();
        for (k, &e) in m.iter().enumerate() {
            if e > 0 {
                prod = prod.mul(&binom_poly(k + 1, e));
            }
        }
        f = f.add(&prod.scale(&c));
    }
    debug_assert!(f.degree() <= d);
    Ok(f)
}

/// Tails (m_2, …, m_d) with Σ_{j≥2} j·m_j ≤ d, deterministic order.
fn enumerate_tails(d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(j: usize, d: usize, used: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if j > d {
            let mut tail = acc.clone();
            while tail.last() == Some(&0) {
                tail.pop();
            }
            out.push(tail);
            return;
        }
        for m in 0..=((d - used) / j) {
            acc.push(m);
            rec(j + 1, d, used + j * m, acc, out);
            acc.pop();
        }
    }
    rec(2, d, 0, &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

fn tail_degree(tail: &[usize]) -> usize {
    tail.iter().enumerate().map(|(k, &m)| (k + 2) * m).sum()
}

/// ∏_j binom(m'_j, m_j) where m'_j are the class's cycle counts.
fn eval_binom_basis(exponents: &[usize], class: &CycleCounts) -> BigRational {
    let mut acc = BigRational::one();
    for (k, &m) in exponents.iter().enumerate() {
        if m == 0 {
            continue;
        }
        let available = class.count(k + 1);
        if available < m {
            return BigRational::zero();
        }
        acc *= rat_int(uint_to_int(&binomial(available, m)));
    }
    acc
}

/// Plain Gaussian elimination over ℚ; `None` if the system is singular.
fn solve_exact(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for v in a[col].iter_mut() {
            *v *= &inv;
        }
        b[col] *= &inv;
        let pivot_row = a[col].clone();
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for (c, pivot_val) in pivot_row.iter().enumerate().skip(col) {
                let delta = &factor * pivot_val;
                a[r][c] -= delta;
            }
            let delta = &factor * &b[col];
            b[r] -= delta;
        }
    }
    Some(b)
}

/// Σ mult · f_λ over a stable decomposition.
pub fn sum_for_decomp(decomp: &[(Partition, u64)]) -> Result<CharPolynomial> {
    let mut acc = CharPolynomial::zero();
    for (lambda, mult) in decomp {
        let f = build_f_lambda(lambda)?;
        acc = acc.add(&f.scale(&rat_int(*mult as i64)));
    }
    Ok(acc)
}

/// Exact integer evaluation, for callers that know the input is a
/// genuine character.
pub fn evaluate_integral(f: &CharPolynomial, ct: &CycleCounts) -> Result<BigInt> {
    let v = f.evaluate(ct);
    as_integer(&v).ok_or_else(|| {
        Error::CrossCheckFailed(format!("character polynomial evaluated to non-integer {v}"))
    })
}
