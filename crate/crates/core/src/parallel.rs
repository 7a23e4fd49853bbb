//! Left and right parallelism, the axiom (DS), spread kernels and
//! translation-invariant classes.
//!
//! A parallel class is never materialised: it is the pair (star line, side),
//! and membership of a line is decided through its star representatives.

use crate::algebra::{AlgebraKind, FourAlgebra, Quaternion, QuaternionAlgebra, SideTag};
use crate::error::{Error, Result};
use crate::geometry::{perp, pure_plane, Subspace};
use crate::scalar::{Field, Rational};

/// (m⁻¹·M, M·m⁻¹) for the first canonical basis vector m of the line M.
///
/// The inverse is only needed up to a scalar factor.
pub fn star_reps<A: FourAlgebra>(
    alg: &A,
    m: &Subspace<A::Scalar>,
) -> Result<(Subspace<A::Scalar>, Subspace<A::Scalar>)> {
    if !m.is_line() {
        return Err(Error::domain(format!("expected a line, got a subspace of dimension {}", m.dim())));
    }
    let basis = m.basis();
    let inv = alg.adjugate(&basis[0])?;
    let reps = (m.left_mul(alg, &inv), m.right_mul(alg, &inv));
    if cfg!(debug_assertions) && alg.kind() != AlgebraKind::Table {
        let inv2 = alg.adjugate(&basis[1])?;
        debug_assert_eq!(reps.0, m.left_mul(alg, &inv2));
        debug_assert_eq!(reps.1, m.right_mul(alg, &inv2));
    }
    Ok(reps)
}

pub fn star_rep<A: FourAlgebra>(
    alg: &A,
    m: &Subspace<A::Scalar>,
    side: SideTag,
) -> Result<Subspace<A::Scalar>> {
    let (l, r) = star_reps(alg, m)?;
    Ok(match side {
        SideTag::Left => l,
        SideTag::Right => r,
    })
}

/// Left parallel: N = cM for some c; right parallel: N = Mc.
pub fn is_parallel_side<A: FourAlgebra>(
    alg: &A,
    m: &Subspace<A::Scalar>,
    n: &Subspace<A::Scalar>,
    side: SideTag,
) -> Result<bool> {
    Ok(star_rep(alg, m, side)? == star_rep(alg, n, side)?)
}

/// The unique line through p in the class of the star line L on the given side.
pub fn line_through_in_class<A: FourAlgebra>(
    alg: &A,
    p: &Subspace<A::Scalar>,
    l: &Subspace<A::Scalar>,
    side: SideTag,
) -> Result<Subspace<A::Scalar>> {
    if !p.is_point() {
        return Err(Error::domain("expected a point"));
    }
    if !l.is_star_line(alg) {
        return Err(Error::domain("expected a line through F·1"));
    }
    let q = p.representative().expect("a point has a representative");
    Ok(match side {
        SideTag::Left => l.left_mul(alg, &q),
        SideTag::Right => l.right_mul(alg, &q),
    })
}

/// Result of one (DS) test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DsOutcome<F: Field> {
    Common(Subspace<F>),
    /// The two constructed lines are skew.
    Violation { m1: Subspace<F>, m2: Subspace<F> },
}

impl<F: Field> DsOutcome<F> {
    pub fn is_violation(&self) -> bool {
        matches!(self, DsOutcome::Violation { .. })
    }
}

/// Intersects the line through p2 left parallel to p0p1 with the line through
/// p1 right parallel to p0p2.
pub fn ds_check<A: FourAlgebra>(
    alg: &A,
    p0: &Subspace<A::Scalar>,
    p1: &Subspace<A::Scalar>,
    p2: &Subspace<A::Scalar>,
) -> Result<DsOutcome<A::Scalar>> {
    if !(p0.is_point() && p1.is_point() && p2.is_point()) {
        return Err(Error::domain("expected three points"));
    }
    if p0.join(p1).join(p2).dim() != 3 {
        return Err(Error::domain("points are collinear or coincide"));
    }
    let l01 = star_rep(alg, &p0.join(p1), SideTag::Left)?;
    let l02 = star_rep(alg, &p0.join(p2), SideTag::Right)?;
    let m1 = line_through_in_class(alg, p2, &l01, SideTag::Left)?;
    let m2 = line_through_in_class(alg, p1, &l02, SideTag::Right)?;
    let meet = m1.intersect(&m2);
    Ok(match meet.representative() {
        Some(v) => DsOutcome::Common(Subspace::point(&v)),
        None => DsOutcome::Violation { m1, m2 },
    })
}

/// Star line L with S_r(M) = S_r(L); λ_g fixes every line of S_r(M) for g ∈ L∖0.
pub fn right_class_kernel<A: FourAlgebra>(alg: &A, m: &Subspace<A::Scalar>) -> Result<Subspace<A::Scalar>> {
    star_rep(alg, m, SideTag::Right)
}

/// Star line L with S_ℓ(M) = S_ℓ(L); ρ_g fixes every line of S_ℓ(M) for g ∈ L∖0.
pub fn left_class_kernel<A: FourAlgebra>(alg: &A, m: &Subspace<A::Scalar>) -> Result<Subspace<A::Scalar>> {
    star_rep(alg, m, SideTag::Left)
}

/// Whether the translation by g on `side` maps the line N onto itself.
pub fn translation_fixes_line<A: FourAlgebra>(
    alg: &A,
    g: &Quaternion<A::Scalar>,
    side: SideTag,
    n: &Subspace<A::Scalar>,
) -> bool {
    match side {
        SideTag::Left => n.left_mul(alg, g) == *n,
        SideTag::Right => n.right_mul(alg, g) == *n,
    }
}

/// Classes on one side invariant under the translation by g on the other side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantClassProfile {
    /// Side of the classes: right for λ_g, left for ρ_g.
    pub side: SideTag,
    pub exceptional_line: Subspace<Rational>,
    pub pencil_present: bool,
    pub pencil_plane: Option<Subspace<Rational>>,
}

impl InvariantClassProfile {
    /// Whether the class of the star line L is predicted invariant.
    pub fn predicts(&self, l: &Subspace<Rational>) -> bool {
        *l == self.exceptional_line || self.pencil_plane.as_ref().is_some_and(|e| l.is_subspace_of(e))
    }
}

fn require_nonscalar(alg: &QuaternionAlgebra, g: &Quaternion<Rational>) -> Result<()> {
    if g.is_zero() || alg.in_base_field(g) {
        return Err(Error::domain("g must lie outside F·1"));
    }
    Ok(())
}

/// Profile of the classes on `side` invariant under the opposite translation by g.
pub fn invariant_classes(alg: &QuaternionAlgebra, g: &Quaternion<Rational>, side: SideTag) -> Result<InvariantClassProfile> {
    require_nonscalar(alg, g)?;
    let gi = alg.inverse(g)?;
    let pure = pure_plane(alg);
    let plane = match side {
        SideTag::Right => pure.left_mul(alg, &gi),
        SideTag::Left => pure.right_mul(alg, &gi),
    };
    let pencil_present = alg.trace(g).is_zero();
    debug_assert_eq!(pencil_present, plane.contains(&alg.unit()));
    Ok(InvariantClassProfile {
        side,
        exceptional_line: Subspace::span([&alg.unit(), g]),
        pencil_present,
        pencil_plane: pencil_present.then_some(plane),
    })
}

/// Right classes S_r(L) with λ_g(S_r(L)) = S_r(L).
pub fn invariant_right_classes(alg: &QuaternionAlgebra, g: &Quaternion<Rational>) -> Result<InvariantClassProfile> {
    invariant_classes(alg, g, SideTag::Right)
}

/// Direct test: the translated star line stays in the class of L.
pub fn is_invariant_class(
    alg: &QuaternionAlgebra,
    g: &Quaternion<Rational>,
    l: &Subspace<Rational>,
    side: SideTag,
) -> Result<bool> {
    require_nonscalar(alg, g)?;
    if !l.is_star_line(alg) {
        return Err(Error::domain("expected a line through F·1"));
    }
    let moved = match side {
        SideTag::Right => l.left_mul(alg, g),
        SideTag::Left => l.right_mul(alg, g),
    };
    is_parallel_side(alg, &moved, l, side)
}

pub fn is_invariant_right_class(alg: &QuaternionAlgebra, g: &Quaternion<Rational>, l: &Subspace<Rational>) -> Result<bool> {
    is_invariant_class(alg, g, l, SideTag::Right)
}

/// Incidences among F1, Fg, (F1)^⊥ and g⁻¹(F1)^⊥ for a fixed g.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemarkCasesProfile {
    pub trace_zero: bool,
    pub star_line: Subspace<Rational>,
    pub pure_plane: Subspace<Rational>,
    pub pencil_plane: Subspace<Rational>,
    /// span(1,g) ∩ (F1)^⊥
    pub meet_pure: Subspace<Rational>,
    /// span(1,g) ∩ g⁻¹(F1)^⊥
    pub meet_pencil: Subspace<Rational>,
    /// span(1,g) ∩ span(1,g)^⊥ = 0
    pub skew_to_polar: bool,
    /// λ_g² is a scalar map.
    pub involution: bool,
    /// Every expected incidence holds.
    pub consistent: bool,
}

pub fn remark_cases_profile(alg: &QuaternionAlgebra, g: &Quaternion<Rational>) -> Result<RemarkCasesProfile> {
    require_nonscalar(alg, g)?;
    let one = alg.unit();
    let gi = alg.inverse(g)?;
    let star_line = Subspace::span([&one, g]);
    let pure = pure_plane(alg);
    let pencil = pure.left_mul(alg, &gi);
    let meet_pure = star_line.intersect(&pure);
    let meet_pencil = star_line.intersect(&pencil);
    let skew = star_line.intersect(&perp(alg, &star_line)).dim() == 0;
    let lg = alg.left_map(g);
    let involution = lg.compose(&lg).is_scalar();
    let trace_zero = alg.trace(g).is_zero();

    let distinct = Subspace::point(&one) != Subspace::point(g) && pure != pencil;
    let incidences = if trace_zero {
        meet_pure == Subspace::point(g) && meet_pencil == Subspace::point(&one)
    } else {
        let pure_part = g.clone() - alg.conjugate(g);
        meet_pure == Subspace::point(&pure_part)
            && meet_pencil == Subspace::point(&alg.mul(&gi, &pure_part))
    };
    Ok(RemarkCasesProfile {
        trace_zero,
        consistent: distinct && incidences && skew && involution == trace_zero,
        star_line,
        pure_plane: pure,
        pencil_plane: pencil,
        meet_pure,
        meet_pencil,
        skew_to_polar: skew,
        involution,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QuarticExtension;

    type Q = Quaternion<Rational>;
    type S = Subspace<Rational>;

    fn q(c: [i64; 4]) -> Q {
        Quaternion::from_ints(c)
    }
    fn sp(vs: &[[i64; 4]]) -> S {
        Subspace::span(&vs.iter().map(|c| q(*c)).collect::<Vec<_>>())
    }
    const ONE: [i64; 4] = [1, 0, 0, 0];
    const I: [i64; 4] = [0, 1, 0, 0];
    const J: [i64; 4] = [0, 0, 1, 0];
    const K: [i64; 4] = [0, 0, 0, 1];

    #[test]
    fn star_reps_worked() {
        let h = QuaternionAlgebra::hamilton();
        assert_eq!(star_reps(&h, &sp(&[J, K])).unwrap(), (sp(&[ONE, I]), sp(&[ONE, I])));
        let l = sp(&[ONE, [0, 2, 3, 0]]);
        assert_eq!(star_reps(&h, &l).unwrap(), (l.clone(), l));
        let m = sp(&[[1, 0, 1, 0], [0, 1, 0, -1]]);
        assert_eq!(star_rep(&h, &m, SideTag::Left).unwrap(), sp(&[ONE, I]));
        assert_eq!(star_rep(&h, &m, SideTag::Right).unwrap(), sp(&[ONE, K]));
        assert!(star_reps(&h, &sp(&[ONE])).is_err());
    }

    #[test]
    fn parallel_side_worked() {
        let h = QuaternionAlgebra::hamilton();
        assert!(is_parallel_side(&h, &sp(&[J, K]), &sp(&[ONE, I]), SideTag::Left).unwrap());
        for side in [SideTag::Left, SideTag::Right] {
            assert!(!is_parallel_side(&h, &sp(&[ONE, I]), &sp(&[ONE, J]), side).unwrap());
        }
        let moved = sp(&[ONE, I]).left_mul(&h, &q([1, 0, 1, 0]));
        assert_eq!(moved, sp(&[[1, 0, 1, 0], [0, 1, 0, -1]]));
        assert!(!is_parallel_side(&h, &sp(&[ONE, I]), &moved, SideTag::Right).unwrap());
    }

    #[test]
    fn line_through_worked() {
        let h = QuaternionAlgebra::hamilton();
        let l = sp(&[ONE, I]);
        for side in [SideTag::Left, SideTag::Right] {
            assert_eq!(line_through_in_class(&h, &sp(&[J]), &l, side).unwrap(), sp(&[J, K]));
            assert_eq!(line_through_in_class(&h, &sp(&[ONE]), &l, side).unwrap(), l);
        }
        assert!(line_through_in_class(&h, &sp(&[J]), &sp(&[J, K]), SideTag::Left).is_err());
    }

    #[test]
    fn ds_worked() {
        let h = QuaternionAlgebra::hamilton();
        let out = ds_check(&h, &sp(&[ONE]), &sp(&[I]), &sp(&[J])).unwrap();
        assert_eq!(out, DsOutcome::Common(sp(&[K])));
        let out = ds_check(&h, &sp(&[ONE]), &sp(&[[1, 1, 0, 0]]), &sp(&[[1, 0, 1, 0]])).unwrap();
        assert_eq!(out, DsOutcome::Common(sp(&[[1, 1, 1, -1]])));
        assert!(ds_check(&h, &sp(&[ONE]), &sp(&[I]), &sp(&[[0, 2, 0, 0]])).is_err());
        assert!(ds_check(&h, &sp(&[ONE]), &sp(&[I]), &sp(&[[1, 1, 0, 0]])).is_err());
    }

    #[test]
    fn ds_case_b() {
        let alg = QuarticExtension::standard();
        let pts: Vec<_> = [ONE, I, [1, 0, 1, 1]]
            .iter()
            .map(|c| Subspace::point(&Quaternion::from_ints(*c)))
            .collect();
        let out = ds_check(&alg, &pts[0], &pts[1], &pts[2]).unwrap();
        assert!(!out.is_violation());
    }

    #[test]
    fn kernel_worked() {
        let h = QuaternionAlgebra::hamilton();
        let m = sp(&[J, K]);
        let l = right_class_kernel(&h, &m).unwrap();
        assert_eq!(l, sp(&[ONE, I]));
        assert!(translation_fixes_line(&h, &q(I), SideTag::Left, &m));
        let n = sp(&[ONE, I]).right_mul(&h, &q([2, -1, 3, 1]));
        assert!(translation_fixes_line(&h, &q([1, 1, 0, 0]), SideTag::Left, &n));
        assert!(!translation_fixes_line(&h, &q([1, 0, 1, 0]), SideTag::Left, &n));
        assert_eq!(right_class_kernel(&h, &l).unwrap(), l);
    }

    #[test]
    fn invariant_classes_worked() {
        let h = QuaternionAlgebra::hamilton();
        let p = invariant_right_classes(&h, &q(I)).unwrap();
        assert_eq!(p.exceptional_line, sp(&[ONE, I]));
        assert!(p.pencil_present);
        assert_eq!(p.pencil_plane, Some(sp(&[ONE, J, K])));
        let p = invariant_right_classes(&h, &q([1, 1, 0, 0])).unwrap();
        assert_eq!(p.exceptional_line, sp(&[ONE, I]));
        assert!(!p.pencil_present);
        assert!(invariant_right_classes(&h, &q([2, 0, 0, 0])).is_err());
    }

    #[test]
    fn invariance_direct_worked() {
        let h = QuaternionAlgebra::hamilton();
        assert!(is_invariant_right_class(&h, &q(I), &sp(&[ONE, I])).unwrap());
        assert!(is_invariant_right_class(&h, &q(I), &sp(&[ONE, J])).unwrap());
        assert!(!is_invariant_right_class(&h, &q([1, 1, 0, 0]), &sp(&[ONE, J])).unwrap());
        let p = invariant_right_classes(&h, &q([1, 1, 0, 0])).unwrap();
        assert!(!p.predicts(&sp(&[ONE, J])));
    }

    #[test]
    fn remark_profile_worked() {
        let h = QuaternionAlgebra::hamilton();
        let p = remark_cases_profile(&h, &q([1, 1, 0, 0])).unwrap();
        assert!(p.consistent);
        assert_eq!(p.meet_pure, sp(&[I]));
        assert!(!p.involution);
        let p = remark_cases_profile(&h, &q(I)).unwrap();
        assert!(p.consistent && p.involution && p.trace_zero);
        assert_eq!(p.meet_pure, sp(&[I]));
        assert!(remark_cases_profile(&h, &q([3, 0, 0, 0])).is_err());
    }
}
