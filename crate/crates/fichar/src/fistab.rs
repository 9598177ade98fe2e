//! FI-module stability bookkeeping.
//!
//! Stability types (I, S) record from which rank on the coinvariant maps
//! are injective / surjective; the star ∗ for an irrelevant or unknown
//! component is first-class and absorbs under max. Formal sums of free
//! modules M(λ) or irreducible families P(λ) carry weight and type
//! bounds, and a first-quadrant spectral grid pushes those bounds from
//! page to page with the three-term-complex rule.

use std::fmt;

use crate::induct::m_lambda_at;
use crate::partition::Partition;
use crate::symchar::IrrDecomp;
use crate::{Error, Result};

/// An extended stability degree: a finite rank bound or the paper-table
/// star for a component nothing depends on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degree {
    Finite(usize),
    Unknown,
}

impl Degree {
    /// max with Unknown absorbing.
    pub fn max(self, other: Degree) -> Degree {
        match (self, other) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a.max(b)),
            _ => Degree::Unknown,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::Finite(v) => Some(v),
            Degree::Unknown => None,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Finite(v) => write!(f, "{v}"),
            Degree::Unknown => write!(f, "*"),
        }
    }
}

/// Stability type (I, S): injectivity and surjectivity degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StabilityType {
    pub injectivity: Degree,
    pub surjectivity: Degree,
}

impl StabilityType {
    pub fn new(injectivity: usize, surjectivity: usize) -> Self {
        StabilityType {
            injectivity: Degree::Finite(injectivity),
            surjectivity: Degree::Finite(surjectivity),
        }
    }

    pub const ZERO: StabilityType = StabilityType {
        injectivity: Degree::Finite(0),
        surjectivity: Degree::Finite(0),
    };

    /// Stability degree max(I, S), when both components are known.
    pub fn stability_degree(&self) -> Degree {
        self.injectivity.max(self.surjectivity)
    }

    pub fn componentwise_max(&self, other: &StabilityType) -> StabilityType {
        StabilityType {
            injectivity: self.injectivity.max(other.injectivity),
            surjectivity: self.surjectivity.max(other.surjectivity),
        }
    }
}

impl fmt::Display for StabilityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.injectivity, self.surjectivity)
    }
}

/// Homology of a three-term complex U → V → W with types (∗, A), (B, C),
/// (D, ∗): the middle homology has type (max(A, B), max(C, D)).
pub fn homology_type(u: StabilityType, v: StabilityType, w: StabilityType) -> StabilityType {
    StabilityType {
        injectivity: u.surjectivity.max(v.injectivity),
        surjectivity: v.surjectivity.max(w.injectivity),
    }
}

/// Componentwise max over the quotients of a filtration. Exact when all
/// quotients share one type; an upper bound otherwise.
pub fn filtration_type(quotients: &[StabilityType]) -> Result<StabilityType> {
    let (first, rest) = quotients.split_first().ok_or(Error::EmptyFiltration)?;
    Ok(rest
        .iter()
        .fold(*first, |acc, t| acc.componentwise_max(t)))
}

// ---------------------------------------------------------------------------
// Formal FI-module expressions

/// Coefficient of a formal term: a plain multiplicity or an opaque
/// constant like the group-cohomology coefficients on an E₂ page.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coefficient {
    Num(u64),
    Symbol(String),
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Num(n) => write!(f, "{n}"),
            Coefficient::Symbol(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FIExprKind {
    /// Terms c·M(λ): type (0, λ₁), weight ≤ |λ|.
    FreeSum,
    /// Terms c·P(λ): stability degree ≤ λ₁, weight ≤ |λ|.
    IrredSum,
}

/// A formal nonnegative sum of free or irreducible FI-modules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FIExpr {
    pub kind: FIExprKind,
    pub terms: Vec<(Coefficient, Partition)>,
}

impl FIExpr {
    pub fn free_sum(terms: Vec<(Coefficient, Partition)>) -> Self {
        FIExpr {
            kind: FIExprKind::FreeSum,
            terms,
        }
    }

    pub fn irred_sum(terms: Vec<(Coefficient, Partition)>) -> Self {
        FIExpr {
            kind: FIExprKind::IrredSum,
            terms,
        }
    }

    /// Max of the term weights |λ|.
    pub fn weight_bound(&self) -> usize {
        self.terms.iter().map(|(_, l)| l.size()).max().unwrap_or(0)
    }

    /// Componentwise max of the term types.
    pub fn stability_type(&self) -> StabilityType {
        let term_type = |l: &Partition| match self.kind {
            FIExprKind::FreeSum => StabilityType::new(0, l.first()),
            FIExprKind::IrredSum => StabilityType::new(l.first(), l.first()),
        };
        self.terms
            .iter()
            .map(|(_, l)| term_type(l))
            .fold(StabilityType::ZERO, |acc, t| acc.componentwise_max(&t))
    }

    pub fn has_symbolic(&self) -> bool {
        self.terms
            .iter()
            .any(|(c, _)| matches!(c, Coefficient::Symbol(_)))
    }

    /// Evaluates at a set of size s to a genuine decomposition. Errors if
    /// any coefficient is symbolic.
    pub fn evaluate_numeric(&self, s: usize) -> Result<IrrDecomp> {
        let mut out = IrrDecomp::empty(s);
        for (coeff, lambda) in &self.terms {
            let c = match coeff {
                Coefficient::Num(n) => *n,
                Coefficient::Symbol(name) => {
                    return Err(Error::SymbolicCoefficient(name.clone()))
                }
            };
            out.add_scaled(&self.term_at(lambda, s), c);
        }
        Ok(out)
    }

    /// Evaluates termwise, keeping coefficients attached — the symbolic
    /// counterpart of [`FIExpr::evaluate_numeric`].
    pub fn evaluate_symbolic(&self, s: usize) -> Vec<(Coefficient, IrrDecomp)> {
        self.terms
            .iter()
            .map(|(c, l)| (c.clone(), self.term_at(l, s)))
            .collect()
    }

    fn term_at(&self, lambda: &Partition, s: usize) -> IrrDecomp {
        match self.kind {
            FIExprKind::FreeSum => m_lambda_at(lambda, s),
            FIExprKind::IrredSum => {
                let mut d = IrrDecomp::empty(s);
                if s >= lambda.size() + lambda.first() {
                    let padded = lambda.pad(s).expect("range checked").as_partition();
                    d.add_term(padded, 1);
                }
                d
            }
        }
    }
}

impl fmt::Display for FIExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let wrapper = match self.kind {
            FIExprKind::FreeSum => "M",
            FIExprKind::IrredSum => "P",
        };
        for (k, (c, l)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " ⊕ ")?;
            }
            match c {
                Coefficient::Num(1) => write!(f, "{wrapper}{l}")?,
                Coefficient::Num(n) => write!(f, "{n}·{wrapper}{l}")?,
                Coefficient::Symbol(s) => write!(f, "{s} ⊗ {wrapper}{l}")?,
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Spectral grid

/// What a beyond-window read during a page turn means.
///
/// The grid is a finite window into a first-quadrant spectral sequence;
/// differentials near the window edge reach entries that were never
/// stored. `Extend` reads the nearest stored entry — exact whenever the
/// seeding was uniform across the quadrant, as it is for the E₂ pages
/// built here. `Strict` refuses to guess: touched entries are marked and
/// assembling over them reports non-convergence instead of silently
/// assuming zero (first-quadrant vanishing only holds for p < 0 or
/// q < 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgePolicy {
    Extend,
    Strict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridEntry {
    pub stype: StabilityType,
    pub weight: usize,
    pub expr: Option<FIExpr>,
    pub tainted: bool,
}

/// A window 0 ≤ p ≤ p_max, 0 ≤ q ≤ q_max of one page of a first-quadrant
/// spectral sequence of FI-modules, tracking stability types and weight
/// bounds only — never actual differentials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralGrid {
    page: usize,
    p_max: usize,
    q_max: usize,
    policy: EdgePolicy,
    entries: Vec<Vec<GridEntry>>, // indexed [p][q]
}

impl SpectralGrid {
    /// A page-2 grid from an arbitrary seeding rule.
    pub fn from_seed(
        p_max: usize,
        q_max: usize,
        policy: EdgePolicy,
        mut seed: impl FnMut(usize, usize) -> GridEntry,
    ) -> Self {
        let entries = (0..=p_max)
            .map(|p| (0..=q_max).map(|q| seed(p, q)).collect())
            .collect();
        SpectralGrid {
            page: 2,
            p_max,
            q_max,
            policy,
            entries,
        }
    }

    /// A page-2 grid seeded with one type everywhere and weight q per
    /// row, the shape of the E₂ pages here. Uniform seeding is what makes
    /// `EdgePolicy::Extend` exact.
    pub fn uniform(p_max: usize, q_max: usize, stype: StabilityType) -> Self {
        Self::from_seed(p_max, q_max, EdgePolicy::Extend, |_, q| GridEntry {
            stype,
            weight: q,
            expr: None,
            tainted: false,
        })
    }

    pub fn page(&self) -> usize {
        self.page
    }

    pub fn p_max(&self) -> usize {
        self.p_max
    }

    pub fn q_max(&self) -> usize {
        self.q_max
    }

    pub fn entry(&self, p: usize, q: usize) -> &GridEntry {
        &self.entries[p][q]
    }

    pub fn entry_mut(&mut self, p: usize, q: usize) -> &mut GridEntry {
        &mut self.entries[p][q]
    }

    /// Stability type of a differential endpoint. Outside the first
    /// quadrant the entry is zero, type (0,0); beyond the window the
    /// policy decides.
    fn neighbor_type(&self, p: isize, q: isize) -> (StabilityType, bool) {
        if p < 0 || q < 0 {
            return (StabilityType::ZERO, false);
        }
        let (p, q) = (p as usize, q as usize);
        if p <= self.p_max && q <= self.q_max {
            return (self.entries[p][q].stype, false);
        }
        match self.policy {
            EdgePolicy::Extend => {
                let entry = &self.entries[p.min(self.p_max)][q.min(self.q_max)];
                (entry.stype, false)
            }
            EdgePolicy::Strict => (
                StabilityType {
                    injectivity: Degree::Unknown,
                    surjectivity: Degree::Unknown,
                },
                true,
            ),
        }
    }

    /// Computes page k+1 from page k. Each entry becomes the homology of
    /// the differentials of bidegree (k, −k+1) through it; weight bounds
    /// carry over unchanged since subquotients preserve weight.
    pub fn turn_page(&self) -> SpectralGrid {
        let k = self.page as isize;
        let entries = (0..=self.p_max)
            .map(|p| {
                (0..=self.q_max)
                    .map(|q| {
                        let (pi, qi) = (p as isize, q as isize);
                        let (incoming, taint_in) = self.neighbor_type(pi - k, qi + k - 1);
                        let (outgoing, taint_out) = self.neighbor_type(pi + k, qi - k + 1);
                        let old = &self.entries[p][q];
                        GridEntry {
                            stype: homology_type(incoming, old.stype, outgoing),
                            weight: old.weight,
                            expr: None,
                            tainted: old.tainted || taint_in || taint_out,
                        }
                    })
                    .collect()
            })
            .collect();
        SpectralGrid {
            page: self.page + 1,
            p_max: self.p_max,
            q_max: self.q_max,
            policy: self.policy,
            entries,
        }
    }

    /// Whether every differential touching the anti-diagonal p + q = i
    /// has exited the first quadrant, so those entries are final.
    pub fn converged_on(&self, i: usize) -> bool {
        self.page >= i + 2
    }

    /// Weight bound and stability type of the abutment in total degree i,
    /// read off the anti-diagonal: the abutment is filtered with graded
    /// quotients the E_∞ entries, so weight is the max of the entry
    /// weights and the type is the filtration bound.
    pub fn converge_and_assemble(&self, i: usize) -> Result<(usize, StabilityType)> {
        if i > self.p_max || i > self.q_max {
            return Err(Error::NotConverged(format!(
                "anti-diagonal p+q={i} leaves the stored {}×{} window",
                self.p_max, self.q_max
            )));
        }
        if !self.converged_on(i) {
            return Err(Error::NotConverged(format!(
                "page {} still has differentials touching p+q={i} (need page ≥ {})",
                self.page,
                i + 2
            )));
        }
        let mut weight = 0;
        let mut types = Vec::with_capacity(i + 1);
        for p in 0..=i {
            let entry = &self.entries[p][i - p];
            if entry.tainted {
                return Err(Error::NotConverged(format!(
                    "entry ({p},{}) depended on data beyond the stored window",
                    i - p
                )));
            }
            weight = weight.max(entry.weight);
            types.push(entry.stype);
        }
        Ok((weight, filtration_type(&types)?))
    }

    /// Aligned text table in the (I,S) annotation style, q rows from the
    /// top down.
    pub fn render(&self) -> String {
        let mut cells: Vec<Vec<String>> = Vec::new();
        for q in (0..=self.q_max).rev() {
            let row = (0..=self.p_max)
                .map(|p| self.entries[p][q].stype.to_string())
                .collect();
            cells.push(row);
        }
        let width = cells
            .iter()
            .flatten()
            .map(|s| s.chars().count())
            .max()
            .unwrap_or(1);
        let mut out = format!("page {}\n", self.page);
        for (row, q) in cells.iter().zip((0..=self.q_max).rev()) {
            out.push_str(&format!("q={q:<3}|"));
            for cell in row {
                out.push_str(&format!(" {cell:>width$}"));
            }
            out.push('\n');
        }
        out.push_str(&format!("     +{}\n", "-".repeat((width + 1) * (self.p_max + 1))));
        out.push_str("      ");
        for p in 0..=self.p_max {
            out.push_str(&format!(" {:>width$}", format!("p={p}")));
        }
        out.push('\n');
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut entries = Vec::new();
        for p in 0..=self.p_max {
            for q in 0..=self.q_max {
                let e = &self.entries[p][q];
                entries.push(serde_json::json!({
                    "p": p,
                    "q": q,
                    "injectivity": e.stype.injectivity.to_string(),
                    "surjectivity": e.stype.surjectivity.to_string(),
                    "weight": e.weight,
                }));
            }
        }
        serde_json::json!({
            "page": self.page,
            "p_max": self.p_max,
            "q_max": self.q_max,
            "entries": entries,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symchar::IrrDecomp;

    const fn fin(i: usize, s: usize) -> StabilityType {
        StabilityType {
            injectivity: Degree::Finite(i),
            surjectivity: Degree::Finite(s),
        }
    }

    fn star_left(s: usize) -> StabilityType {
        StabilityType {
            injectivity: Degree::Unknown,
            surjectivity: Degree::Finite(s),
        }
    }

    fn star_right(i: usize) -> StabilityType {
        StabilityType {
            injectivity: Degree::Finite(i),
            surjectivity: Degree::Unknown,
        }
    }

    #[test]
    fn degree_max_absorbs_unknown() {
        assert_eq!(Degree::Finite(3).max(Degree::Finite(5)), Degree::Finite(5));
        assert_eq!(Degree::Unknown.max(Degree::Finite(5)), Degree::Unknown);
        assert_eq!(Degree::Finite(0).max(Degree::Unknown), Degree::Unknown);
    }

    #[test]
    fn homology_type_examples() {
        let n = 4;
        // first-quadrant edge: incoming from a zero entry
        assert_eq!(
            homology_type(star_left(0), fin(0, n), star_right(n)),
            fin(0, n)
        );
        // interior case
        assert_eq!(
            homology_type(star_left(n), fin(0, n), star_right(n)),
            fin(n, n)
        );
        // all zero
        assert_eq!(
            homology_type(StabilityType::ZERO, StabilityType::ZERO, StabilityType::ZERO),
            StabilityType::ZERO
        );
    }

    #[test]
    fn filtration_type_examples() {
        let n = 3;
        assert_eq!(
            filtration_type(&[fin(0, n), fin(0, n), fin(0, n)]).unwrap(),
            fin(0, n)
        );
        assert_eq!(filtration_type(&[fin(0, 0)]).unwrap(), fin(0, 0));
        assert_eq!(
            filtration_type(&[fin(0, n), fin(n, n)]).unwrap(),
            fin(n, n)
        );
        assert!(matches!(filtration_type(&[]), Err(Error::EmptyFiltration)));
    }

    #[test]
    fn monotone_and_permutation_invariant() {
        let types = [fin(0, 1), fin(2, 0), fin(1, 3), star_left(2)];
        // permutation invariance of filtration_type
        let a = filtration_type(&[types[0], types[1], types[2]]).unwrap();
        let b = filtration_type(&[types[2], types[0], types[1]]).unwrap();
        assert_eq!(a, b);
        // monotonicity of homology_type in each slot
        let base = homology_type(types[0], types[1], types[2]);
        let bumped = homology_type(types[0], fin(9, 9), types[2]);
        assert_eq!(base.componentwise_max(&bumped), bumped);
    }

    #[test]
    fn fiexpr_types_and_weights() {
        let m = FIExpr::free_sum(vec![
            (Coefficient::Num(1), Partition::of(&[2, 1])),
            (Coefficient::Num(2), Partition::of(&[1, 1, 1])),
        ]);
        assert_eq!(m.weight_bound(), 3);
        assert_eq!(m.stability_type(), fin(0, 2));

        let p = FIExpr::irred_sum(vec![(Coefficient::Num(1), Partition::of(&[2, 2]))]);
        assert_eq!(p.stability_type(), fin(2, 2));
        assert_eq!(p.weight_bound(), 4);
    }

    #[test]
    fn evaluate_examples() {
        // M((1)) at s = 3
        let m = FIExpr::free_sum(vec![(Coefficient::Num(1), Partition::of(&[1]))]);
        assert_eq!(
            m.evaluate_numeric(3).unwrap(),
            IrrDecomp::from_terms(3, [(Partition::of(&[3]), 1), (Partition::of(&[2, 1]), 1)])
        );

        // P((1,1)) at s = 2 is zero: 2 < |λ| + λ₁ = 3
        let p = FIExpr::irred_sum(vec![(Coefficient::Num(1), Partition::of(&[1, 1]))]);
        assert!(p.evaluate_numeric(2).unwrap().is_zero());

        // P(∅) at s = 5
        let t = FIExpr::irred_sum(vec![(Coefficient::Num(1), Partition::empty())]);
        assert_eq!(
            t.evaluate_numeric(5).unwrap(),
            IrrDecomp::from_terms(5, [(Partition::of(&[5]), 1)])
        );

        // symbolic coefficients refuse numeric evaluation but evaluate
        // termwise
        let sym = FIExpr::free_sum(vec![(
            Coefficient::Symbol("C_{0,[1]}".into()),
            Partition::of(&[1]),
        )]);
        assert!(matches!(
            sym.evaluate_numeric(3),
            Err(Error::SymbolicCoefficient(_))
        ));
        let terms = sym.evaluate_symbolic(3);
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].1.num_terms(), 2);
    }

    #[test]
    fn turn_page_reproduces_three_term_rule() {
        let n = 4;
        let grid = SpectralGrid::uniform(8, 8, fin(0, n));
        let page3 = grid.turn_page();
        assert_eq!(page3.page(), 3);
        for p in 0..=8 {
            for q in 0..=8 {
                let expect_inj = if p < 2 { 0 } else { n };
                assert_eq!(page3.entry(p, q).stype, fin(expect_inj, n), "({p},{q})");
                assert_eq!(page3.entry(p, q).weight, q);
            }
        }
    }

    #[test]
    fn zero_grid_is_fixed_point() {
        let grid = SpectralGrid::uniform(5, 5, StabilityType::ZERO);
        let next = grid.turn_page();
        for p in 0..=5 {
            for q in 0..=5 {
                assert_eq!(next.entry(p, q).stype, StabilityType::ZERO);
            }
        }
    }

    #[test]
    fn turn_page_never_decreases() {
        let n = 3;
        let mut grid = SpectralGrid::uniform(6, 6, fin(0, n));
        for _ in 0..6 {
            let next = grid.turn_page();
            for p in 0..=6 {
                for q in 0..=6 {
                    let old = grid.entry(p, q).stype;
                    let new = next.entry(p, q).stype;
                    assert_eq!(old.componentwise_max(&new), new, "({p},{q})");
                }
            }
            grid = next;
        }
    }

    #[test]
    fn assemble_uniform_grid() {
        let n = 2;
        let mut grid = SpectralGrid::uniform(8, 8, fin(0, n));
        let i = 4;
        assert!(matches!(
            grid.converge_and_assemble(i),
            Err(Error::NotConverged(_))
        ));
        while !grid.converged_on(i) {
            grid = grid.turn_page();
        }
        let (weight, stype) = grid.converge_and_assemble(i).unwrap();
        assert_eq!(weight, i);
        assert_eq!(stype, fin(n, n));
        assert_eq!(stype.stability_degree(), Degree::Finite(n));
    }

    #[test]
    fn single_entry_grid() {
        let grid = SpectralGrid::uniform(0, 0, StabilityType::ZERO);
        let (weight, stype) = grid.converge_and_assemble(0).unwrap();
        assert_eq!(weight, 0);
        assert_eq!(stype, StabilityType::ZERO);
    }

    #[test]
    fn strict_policy_taints_edge_reads() {
        let n = 2;
        let grid = SpectralGrid::from_seed(4, 4, EdgePolicy::Strict, |_, q| GridEntry {
            stype: fin(0, n),
            weight: q,
            expr: None,
            tainted: false,
        });
        let mut g = grid;
        for _ in 0..5 {
            g = g.turn_page();
        }
        // anti-diagonal 4 touches entries whose updates read beyond the
        // 4×4 window, so assembly must refuse
        assert!(matches!(
            g.converge_and_assemble(4),
            Err(Error::NotConverged(_))
        ));
    }

    #[test]
    fn render_contains_annotations() {
        let grid = SpectralGrid::uniform(2, 1, fin(0, 7));
        let text = grid.render();
        assert!(text.contains("(0,7)"));
        assert!(text.contains("p=2"));
        assert!(text.contains("q=0"));
        let json = grid.to_json();
        assert_eq!(json["page"], 2);
        assert_eq!(json["entries"].as_array().unwrap().len(), 6);
    }
}
