//! Stability data for the cohomology of Γ_{n,s}, the groups of homotopy
//! classes of self-equivalences of a rank-n graph fixing s marked points.
//!
//! Rank 1 has a closed form: H^i(Γ_{1,•}) is P(1^i) for even i and zero
//! for odd i. For n ≥ 2 the extension 1 → F_n^s → Γ_{n,s} → Out(F_n) → 1
//! yields a first-quadrant spectral sequence of FI-modules whose E₂ page
//! is ⊕_{|λ|=q, λ₁≤n} C_{p,λ} ⊗ M(λ); the coefficients C_{p,λ} are group
//! cohomology of Out(F_n) and stay symbolic. Pushing stability types
//! through the pages gives weight ≤ i, stability degree n, and the
//! stable range s ≥ n + i; stored decompositions in low rank make the
//! stable characters and dimensions fully explicit.

use num::{BigRational, BigUint, Zero};

use crate::arith::{as_integer, binomial, rat_int, uint_to_int};
use crate::charpoly::{sum_for_decomp, CharPolynomial};
use crate::fistab::{Coefficient, Degree, FIExpr, SpectralGrid, StabilityType};
use crate::induct::{m_lambda_at, schur_dim, wedge_power_character};
use crate::partition::Partition;
use crate::symchar::IrrDecomp;
use crate::{Error, Result};

/// A cohomology query: rank n ≥ 1 of the graph, cohomological degree i.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GammaQuery {
    n: usize,
    i: usize,
}

impl GammaQuery {
    pub fn new(n: usize, i: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::RankTooSmall { n });
        }
        Ok(GammaQuery { n, i })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.i
    }
}

/// A stable decomposition ⊕ c·P(λ), valid for all s ≥ valid_from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableDecomp {
    terms: Vec<(u64, Partition)>,
    valid_from: usize,
}

impl StableDecomp {
    pub fn new(terms: Vec<(u64, Partition)>, valid_from: usize) -> Self {
        let needed = terms
            .iter()
            .map(|(_, l)| l.size() + l.first())
            .max()
            .unwrap_or(0);
        assert!(
            valid_from >= needed,
            "stable range must cover every padded term"
        );
        StableDecomp { terms, valid_from }
    }

    pub fn terms(&self) -> &[(u64, Partition)] {
        &self.terms
    }

    pub fn valid_from(&self) -> usize {
        self.valid_from
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The honest S_s-decomposition at a stable rank s.
    pub fn at(&self, s: usize) -> Result<IrrDecomp> {
        if s < self.valid_from {
            return Err(Error::BelowStableRange {
                s,
                valid_from: self.valid_from,
            });
        }
        let mut out = IrrDecomp::empty(s);
        for (mult, lambda) in &self.terms {
            let padded = lambda.pad(s)?.as_partition();
            out.add_term(padded, *mult);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (mult, lambda) in &self.terms {
            map.insert(lambda.to_string(), serde_json::json!(mult));
        }
        serde_json::json!({ "terms": map, "valid_from": self.valid_from })
    }
}

impl std::fmt::Display for StableDecomp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (mult, lambda)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " ⊕ ")?;
            }
            if *mult != 1 {
                write!(f, "{mult}·")?;
            }
            write!(f, "P{lambda}")?;
        }
        write!(f, " for s ≥ {}", self.valid_from)
    }
}

/// H^i(Γ_{1,•}) in closed form: P(1^i) for even i, zero for odd i.
pub fn rank1_decomp(i: usize) -> StableDecomp {
    if i.is_multiple_of(2) {
        StableDecomp::new(vec![(1, Partition::column(i))], i + 1)
    } else {
        StableDecomp::new(Vec::new(), i + 1)
    }
}

/// The stable decompositions the library knows exactly: all of rank 1,
/// H⁰ (trivial representation for every rank), and H⁴ in rank 2.
pub fn stored_decomp(query: &GammaQuery) -> Option<StableDecomp> {
    let (n, i) = (query.n, query.i);
    if n == 1 {
        return Some(rank1_decomp(i));
    }
    if i == 0 {
        // connected classifying space: H⁰ is the trivial representation
        return Some(StableDecomp::new(vec![(1, Partition::empty())], n));
    }
    if n == 2 && i == 4 {
        return Some(StableDecomp::new(
            vec![
                (1, Partition::of(&[2])),
                (1, Partition::of(&[2, 1])),
                (1, Partition::of(&[2, 2])),
            ],
            6,
        ));
    }
    None
}

// ---------------------------------------------------------------------------
// E₂ page

/// One row E₂^{•,q} of the spectral sequence: a term C_{p,λ} ⊗ M(λ) for
/// each λ ⊢ q with λ₁ ≤ n, the coefficient symbolic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct E2Page {
    pub n: usize,
    pub q: usize,
    pub terms: Vec<(String, Partition)>,
}

impl E2Page {
    /// Per-term expression with the refined type (0, λ₁) on each summand.
    pub fn fi_expr(&self) -> FIExpr {
        FIExpr::free_sum(
            self.terms
                .iter()
                .map(|(sym, l)| (Coefficient::Symbol(sym.clone()), l.clone()))
                .collect(),
        )
    }

    /// The row bound the page-turning engine propagates: every entry of
    /// the second page has stability type (0, n) and weight q.
    pub fn row_type(&self) -> StabilityType {
        StabilityType::new(0, self.n)
    }

    pub fn weight(&self) -> usize {
        self.q
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(sym, l)| {
                serde_json::json!({
                    "coefficient": sym,
                    "lambda": l.to_string(),
                    "injectivity": 0,
                    "surjectivity": l.first(),
                    "weight": l.size(),
                })
            })
            .collect();
        serde_json::json!({ "n": self.n, "q": self.q, "terms": terms })
    }
}

impl std::fmt::Display for E2Page {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "E2^(p,{}) = ", self.q)?;
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (sym, l)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " ⊕ ")?;
            }
            write!(f, "{sym} ⊗ M{l}")?;
        }
        Ok(())
    }
}

/// The q-th row of the E₂ page for rank n ≥ 2: one term per λ ⊢ q with
/// λ₁ ≤ n.
pub fn e2_page(n: usize, q: usize) -> Result<E2Page> {
    if n < 2 {
        return Err(Error::RankTooSmall { n });
    }
    let terms = Partition::enumerate(q, Some(n), None)
        .into_iter()
        .map(|l| (format!("C_{{p,{l}}}"), l))
        .collect();
    Ok(E2Page { n, q, terms })
}

// ---------------------------------------------------------------------------
// Schur–Weyl cross-check

/// Both sides of the Schur–Weyl decomposition of (𝕜^n)^{∧q} ∘ P_(s−q),
/// compared as honest multisets of irreducibles.
#[derive(Debug, Clone)]
pub struct SchurWeylReport {
    pub n: usize,
    pub q: usize,
    pub s: usize,
    /// decompose(wedge_power_character(n, q, s))
    pub lhs: IrrDecomp,
    /// Σ_{λ⊢q, ℓ(λ)≤n} dim 𝕊_λ(𝕜^n) · M(λ')_s
    pub rhs: IrrDecomp,
    /// binom(s,q)·n^q
    pub expected_dimension: BigUint,
    pub matches: bool,
}

impl SchurWeylReport {
    pub fn dimensions_agree(&self) -> bool {
        self.lhs.total_dimension() == self.expected_dimension
            && self.rhs.total_dimension() == self.expected_dimension
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "q": self.q,
            "s": self.s,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "expected_dimension": self.expected_dimension.to_string(),
            "matches": self.matches,
            "dimensions_agree": self.dimensions_agree(),
        })
    }
}

/// Verifies the wedge-power decomposition two ways. A mismatch is
/// reported, not raised; the invariant suites assert on `matches`.
pub fn schur_weyl_report(n: usize, q: usize, s: usize) -> Result<SchurWeylReport> {
    if n < 1 {
        return Err(Error::RankTooSmall { n });
    }
    if q > s {
        return Err(Error::SizeMismatch {
            lambda: q,
            degree: s,
        });
    }
    let lhs = wedge_power_character(n, q, s).decompose()?;

    let mut rhs = IrrDecomp::empty(s);
    for lambda in Partition::enumerate(q, None, Some(n)) {
        let dim = schur_dim(&lambda, n);
        if dim.is_zero() {
            continue;
        }
        let dim: u64 = dim.to_string().parse().expect("Schur dims stay small here");
        rhs.add_scaled(&m_lambda_at(&lambda.conjugate(), s), dim);
    }

    let expected_dimension = binomial(s, q) * BigUint::from(n).pow(q as u32);
    let matches = lhs == rhs;
    Ok(SchurWeylReport {
        n,
        q,
        s,
        lhs,
        rhs,
        expected_dimension,
        matches,
    })
}

// ---------------------------------------------------------------------------
// Stability assembly

/// How the stability bounds for a query were obtained.
#[derive(Debug, Clone)]
pub enum Provenance {
    /// Rank 1: read off the closed form P(1^i).
    Rank1 { decomp: StableDecomp },
    /// Rank ≥ 2: pages of the spectral grid, second page first.
    SpectralRun { pages: Vec<SpectralGrid> },
}

/// Weight bound, stability degree, and the resulting stable range for
/// one (n, i), with the grid pages that produced them.
#[derive(Debug, Clone)]
pub struct StabilityReport {
    pub query: GammaQuery,
    pub weight_bound: usize,
    pub stability_degree: usize,
    pub stable_range: usize,
    pub provenance: Provenance,
}

impl StabilityReport {
    pub fn to_json(&self) -> serde_json::Value {
        let pages = match &self.provenance {
            Provenance::Rank1 { decomp } => serde_json::json!({
                "closed_form": decomp.to_string(),
            }),
            Provenance::SpectralRun { pages } => serde_json::json!({
                "pages": pages.iter().map(|g| g.to_json()).collect::<Vec<_>>(),
            }),
        };
        serde_json::json!({
            "n": self.query.rank(),
            "i": self.query.degree(),
            "weight_bound": self.weight_bound,
            "stability_degree": self.stability_degree,
            "stable_range": self.stable_range,
            "provenance": pages,
        })
    }
}

/// Stability degree and weight bounds for H^i(Γ_{n,•}).
///
/// Rank 1 reads the closed form: P(1^i) has weight ≤ i and stability
/// degree ≤ 1. For n ≥ 2 a grid is seeded with the uniform E₂ bound
/// (type (0,n), weight q), turned until the anti-diagonal p + q = i is
/// final, and assembled through the abutment filtration. Either way the
/// stable range is weight + stability degree = n + i.
pub fn stability_bounds(query: &GammaQuery) -> Result<StabilityReport> {
    let (n, i) = (query.n, query.i);
    if n == 1 {
        let decomp = rank1_decomp(i);
        return Ok(StabilityReport {
            query: *query,
            weight_bound: i,
            stability_degree: 1,
            stable_range: i + 1,
            provenance: Provenance::Rank1 { decomp },
        });
    }

    let window = i.max(12);
    let mut grid = SpectralGrid::uniform(window, window, StabilityType::new(0, n));
    let mut pages = vec![grid.clone()];
    while !grid.converged_on(i) {
        grid = grid.turn_page();
        pages.push(grid.clone());
    }
    let (weight, stype) = grid.converge_and_assemble(i)?;
    let degree = match stype.stability_degree() {
        Degree::Finite(d) => d,
        Degree::Unknown => {
            return Err(Error::NotConverged(
                "assembled stability type has an unknown component".into(),
            ))
        }
    };
    Ok(StabilityReport {
        query: *query,
        weight_bound: weight,
        stability_degree: degree,
        stable_range: weight + degree,
        provenance: Provenance::SpectralRun { pages },
    })
}

/// The stable character polynomial of H^i(Γ_{n,s}), where a stored
/// decomposition pins it down.
pub fn stable_char_poly(query: &GammaQuery) -> Result<CharPolynomial> {
    let decomp = stored_decomp(query).ok_or(Error::NoStoredDecomposition {
        n: query.n,
        i: query.i,
    })?;
    let terms: Vec<(Partition, u64)> = decomp
        .terms()
        .iter()
        .map(|(m, l)| (l.clone(), *m))
        .collect();
    sum_for_decomp(&terms)
}

/// dim H^i(Γ_{n,s}) for s in the stable range, via the dimension
/// polynomial, cross-checked against the hook-length dimensions of the
/// stored decomposition.
pub fn stable_dimension(query: &GammaQuery, s: usize) -> Result<BigUint> {
    let decomp = stored_decomp(query).ok_or(Error::NoStoredDecomposition {
        n: query.n,
        i: query.i,
    })?;
    if s < decomp.valid_from() {
        return Err(Error::BelowStableRange {
            s,
            valid_from: decomp.valid_from(),
        });
    }
    let poly = stable_char_poly(query)?;
    let value = poly.dimension_polynomial().evaluate(s);

    let mut by_hooks = BigRational::zero();
    for (mult, lambda) in decomp.terms() {
        let dim = lambda.pad(s)?.as_partition().hook_dimension();
        by_hooks += rat_int(uint_to_int(&dim)) * rat_int(*mult as i64);
    }
    if value != by_hooks {
        return Err(Error::CrossCheckFailed(format!(
            "dimension polynomial gives {value} but hook lengths give {by_hooks} at s = {s}"
        )));
    }
    let int = as_integer(&value).ok_or_else(|| {
        Error::CrossCheckFailed(format!("dimension {value} is not an integer"))
    })?;
    int.to_biguint()
        .ok_or_else(|| Error::CrossCheckFailed(format!("dimension {int} is negative")))
}
