//! Clifford-like parallelisms and the checks built on them.

use std::collections::BTreeMap;

use crate::algebra::{AlteredAlgebra, FourAlgebra, QuarticExtension, Quaternion, QuaternionAlgebra, SideTag};
use crate::error::{Error, Result};
use crate::geometry::Subspace;
use crate::orbits::{find_star_line_with_key, orbit_lines_in_plane, shell, InnerOrbits, OrbitKey, KEY_SEARCH_BOUND};
use crate::parallel::{invariant_classes, is_invariant_class, is_parallel_side, star_reps};
use crate::scalar::{Field, Rational};

type Q = Quaternion<Rational>;
type S = Subspace<Rational>;

/// Star-line orbits tagged left or right: finitely many exceptions over a default.
#[derive(Clone, Debug)]
pub struct CliffordLikeParallelism<A: InnerOrbits> {
    alg: A,
    exceptions: BTreeMap<OrbitKey, SideTag>,
    default: SideTag,
}

pub fn build_parallelism<A: InnerOrbits>(
    alg: A,
    exceptions: BTreeMap<OrbitKey, SideTag>,
    default: SideTag,
) -> Result<CliffordLikeParallelism<A>> {
    if !exceptions.is_empty() && alg.kind() != crate::algebra::AlgebraKind::CaseA {
        return Err(Error::Unsupported("case B admits only the trivial tagging"));
    }
    Ok(CliffordLikeParallelism { alg, exceptions, default })
}

impl<A: InnerOrbits> CliffordLikeParallelism<A> {
    pub fn algebra(&self) -> &A {
        &self.alg
    }

    pub fn default_tag(&self) -> SideTag {
        self.default
    }

    pub fn exceptions(&self) -> &BTreeMap<OrbitKey, SideTag> {
        &self.exceptions
    }

    fn effective(&self) -> impl Iterator<Item = (&OrbitKey, SideTag)> {
        self.exceptions.iter().filter(|(_, s)| **s != self.default).map(|(k, s)| (k, *s))
    }

    /// Tag of the orbit of the star line L.
    pub fn tag_of(&self, l: &Subspace<A::Scalar>) -> Result<SideTag> {
        for (key, side) in self.effective() {
            if self.alg.line_has_key(l, key)? {
                return Ok(side);
            }
        }
        Ok(self.default)
    }

    /// (star line, side) naming the class of M.
    pub fn class_of(&self, m: &Subspace<A::Scalar>) -> Result<(Subspace<A::Scalar>, SideTag)> {
        let (l, r) = star_reps(&self.alg, m)?;
        let side = self.tag_of(&l)?;
        Ok(match side {
            SideTag::Left => (l, side),
            SideTag::Right => (r, side),
        })
    }

    pub fn is_parallel(&self, m: &Subspace<A::Scalar>, n: &Subspace<A::Scalar>) -> Result<bool> {
        let (_, side) = self.class_of(m)?;
        is_parallel_side(&self.alg, m, n, side)
    }

    /// Whether some nonempty orbit carries the tag `side`.
    pub fn has_realized_tag(&self, side: SideTag) -> Result<bool> {
        if self.default == side {
            return Ok(true);
        }
        for (key, s) in self.effective() {
            if s == side && self.alg.key_is_realized(key)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Distinct from both the left and the right parallelism.
    pub fn is_proper(&self) -> Result<bool> {
        Ok(self.has_realized_tag(SideTag::Left)? && self.has_realized_tag(SideTag::Right)?)
    }
}

/// Outcome of deciding whether a translation stabilises every class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixVerdict {
    Fixes,
    /// A star line whose class is moved.
    Moves { witness: S, key: OrbitKey },
}

impl FixVerdict {
    pub fn fixes(&self) -> bool {
        matches!(self, FixVerdict::Fixes)
    }
}

/// Star lines tried as seeds for a witness search.
const WITNESS_SEEDS: usize = 4;

impl CliffordLikeParallelism<QuaternionAlgebra> {
    /// Whether λ_g maps every parallel class onto itself.
    pub fn lambda_fixes_all_classes(&self, g: &Q) -> Result<FixVerdict> {
        self.fixes_all_classes(g, SideTag::Left)
    }

    /// Whether ρ_g maps every parallel class onto itself.
    pub fn rho_fixes_all_classes(&self, g: &Q) -> Result<FixVerdict> {
        self.fixes_all_classes(g, SideTag::Right)
    }

    fn fixes_all_classes(&self, g: &Q, translation: SideTag) -> Result<FixVerdict> {
        if g.is_zero() {
            return Err(Error::domain("g must be nonzero"));
        }
        // translations fix every class on their own side
        let side = translation.flip();
        if self.alg.in_base_field(g) || !self.has_realized_tag(side)? {
            return Ok(FixVerdict::Fixes);
        }
        let profile = invariant_classes(&self.alg, g, side)?;
        for (seed, key) in self.seed_lines(side)? {
            if !is_invariant_class(&self.alg, g, &seed, side)? {
                return self.moved(seed, key);
            }
            // a plane through the seed holds at most two invariant star lines
            // unless it is the pencil plane
            for e in (1..4).map(|k| seed.join(&Subspace::point(&Quaternion::basis(k)))) {
                if !e.is_plane() || profile.pencil_plane.as_ref() == Some(&e) {
                    continue;
                }
                for l in orbit_lines_in_plane(&self.alg, &seed, &e, 3)? {
                    if !is_invariant_class(&self.alg, g, &l, side)? {
                        return self.moved(l, key);
                    }
                }
            }
        }
        Err(Error::Resource("no moved class found among the seed lines".into()))
    }

    // lines from a plane share the seed's key; no need to factor their discriminants
    fn moved(&self, witness: S, key: OrbitKey) -> Result<FixVerdict> {
        debug_assert!(self.alg.line_has_key(&witness, &key)?);
        Ok(FixVerdict::Moves { witness, key })
    }

    /// Star lines in orbits tagged `side`, with their keys.
    fn seed_lines(&self, side: SideTag) -> Result<Vec<(S, OrbitKey)>> {
        let mut seeds = Vec::new();
        if self.default == side {
            let one = self.alg.unit();
            'outer: for h in 1..=KEY_SEARCH_BOUND {
                for r in shell(h) {
                    let l = Subspace::span([&one, &r]);
                    if self.tag_of(&l)? == side && !seeds.iter().any(|(s, _)| *s == l) {
                        let key = self.alg.line_key(&l)?;
                        seeds.push((l, key));
                        if seeds.len() == WITNESS_SEEDS {
                            break 'outer;
                        }
                    }
                }
            }
        } else {
            for (key, s) in self.effective() {
                if s == side && self.alg.key_is_realized(key)? {
                    seeds.push((find_star_line_with_key(&self.alg, key)?, key.clone()));
                }
            }
        }
        Ok(seeds)
    }

    /// Independent re-check of a witness: it is tagged on the side opposite
    /// the translation, its class is moved, and it satisfies neither
    /// invariance condition.
    pub fn audit_witness(&self, g: &Q, translation: SideTag, witness: &S) -> Result<bool> {
        let side = translation.flip();
        let profile = invariant_classes(&self.alg, g, side)?;
        let moved = match translation {
            SideTag::Left => witness.left_mul(&self.alg, g),
            SideTag::Right => witness.right_mul(&self.alg, g),
        };
        Ok(witness.is_star_line(&self.alg)
            && self.tag_of(witness)? == side
            && !is_parallel_side(&self.alg, &moved, witness, side)?
            && !profile.predicts(witness))
    }
}

impl CliffordLikeParallelism<QuarticExtension> {
    /// H is commutative, so λ_g = ρ_g maps cL to (gc)L.
    pub fn lambda_fixes_all_classes(&self, g: &Quaternion<crate::F2RatFun>) -> Result<FixVerdict> {
        if g.is_zero() {
            return Err(Error::domain("g must be nonzero"));
        }
        Ok(FixVerdict::Fixes)
    }

    pub fn rho_fixes_all_classes(&self, g: &Quaternion<crate::F2RatFun>) -> Result<FixVerdict> {
        self.lambda_fixes_all_classes(g)
    }
}

/// The single right class stabilised by λ_g and the checks made on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingleClassProfile {
    pub class: S,
    /// No pencil of invariant classes, and every sampled other star line moves.
    pub unique: bool,
    pub lines_checked: usize,
    /// λ_g maps every sampled line of the class onto itself.
    pub all_fixed: bool,
}

impl SingleClassProfile {
    pub fn holds(&self) -> bool {
        self.unique && self.all_fixed
    }
}

/// For g ∉ F1 ∪ (F1)^⊥: λ_g stabilises only S_r(span(1,g)) and fixes its lines.
pub fn single_class_fixer_profile(alg: &QuaternionAlgebra, g: &Q, samples: &[Q]) -> Result<SingleClassProfile> {
    if g.is_zero() || alg.in_base_field(g) || alg.trace(g).is_zero() {
        return Err(Error::domain("g must lie outside F1 and (F1)^⊥"));
    }
    let profile = invariant_classes(alg, g, SideTag::Right)?;
    let class = profile.exceptional_line.clone();
    let mut unique = !profile.pencil_present && is_invariant_class(alg, g, &class, SideTag::Right)?;
    let mut all_fixed = true;
    let mut lines_checked = 0;
    for c in samples.iter().filter(|c| !c.is_zero()) {
        let n = class.right_mul(alg, c);
        all_fixed &= n.left_mul(alg, g) == n;
        lines_checked += 1;
        if !alg.in_base_field(c) {
            let other = Subspace::span([&alg.unit(), c]);
            if other != class {
                unique &= !is_invariant_class(alg, g, &other, SideTag::Right)?;
            }
        }
    }
    Ok(SingleClassProfile { class, unique, lines_checked, all_fixed })
}

/// Verdict of comparing two products that share right parallel classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PropTwoVerdict<F: Field> {
    /// At least two shared classes and equal tables.
    Identical { shared: Vec<Subspace<F>> },
    /// Fewer than two shared classes found.
    Inconclusive { shared: Vec<Subspace<F>> },
    /// At least two shared classes but different tables.
    Violation { shared: Vec<Subspace<F>> },
}

/// S_r(L) coincides for both products iff λ_z = λ'_z for all z ∈ L.
pub fn shares_right_class<A: FourAlgebra, B: FourAlgebra<Scalar = A::Scalar>>(
    alg1: &A,
    alg2: &B,
    l: &Subspace<A::Scalar>,
) -> bool {
    l.basis().iter().all(|z| alg1.left_map(z) == alg2.left_map(z))
}

pub fn tables_identical<A: FourAlgebra, B: FourAlgebra<Scalar = A::Scalar>>(alg1: &A, alg2: &B) -> bool {
    (0..4).all(|i| {
        (0..4).all(|j| {
            let (x, y) = (Quaternion::basis(i), Quaternion::basis(j));
            alg1.mul(&x, &y) == alg2.mul(&x, &y)
        })
    })
}

/// Two products with two common right parallel classes coincide.
///
/// Candidate classes are the star lines through the basis vectors and
/// through each sample.
pub fn prop_two_check<A: FourAlgebra, B: FourAlgebra<Scalar = A::Scalar>>(
    alg1: &A,
    alg2: &B,
    samples: &[Quaternion<A::Scalar>],
) -> Result<PropTwoVerdict<A::Scalar>> {
    let one = alg1.unit();
    if one != alg2.unit() {
        return Err(Error::domain("the two products have different units"));
    }
    let candidates = (1..4).map(Quaternion::basis).chain(samples.iter().cloned());
    let mut shared: Vec<Subspace<A::Scalar>> = Vec::new();
    for c in candidates {
        let l = Subspace::span([&one, &c]);
        if l.is_line() && !shared.contains(&l) && shares_right_class(alg1, alg2, &l) {
            shared.push(l);
        }
    }
    Ok(if shared.len() < 2 {
        PropTwoVerdict::Inconclusive { shared }
    } else if tables_identical(alg1, alg2) {
        PropTwoVerdict::Identical { shared }
    } else {
        PropTwoVerdict::Violation { shared }
    })
}

/// Result of comparing the double spaces of H and H^e.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeReport<F: Field> {
    pub identities_hold: bool,
    pub pairs_checked: usize,
    pub disagreements: Vec<(Subspace<F>, Subspace<F>, SideTag)>,
}

impl<F: Field> HeReport<F> {
    pub fn holds(&self) -> bool {
        self.identities_hold && self.disagreements.is_empty()
    }
}

/// λ_h = λᵉ_{he}, ρ_h = ρᵉ_{eh}, and both parallelisms agree on the sampled pairs.
pub fn he_double_space_check<A: FourAlgebra>(
    alg: &A,
    e: &Quaternion<A::Scalar>,
    pairs: &[(Subspace<A::Scalar>, Subspace<A::Scalar>)],
) -> Result<HeReport<A::Scalar>> {
    let alt = AlteredAlgebra::new(alg, e.clone())?;
    let identities_hold = (0..4).all(|n| {
        let h = Quaternion::basis(n);
        alg.left_map(&h) == alt.left_map(&alg.mul(&h, e)) && alg.right_map(&h) == alt.right_map(&alg.mul(e, &h))
    });
    let mut disagreements = Vec::new();
    for (m, n) in pairs {
        for side in [SideTag::Left, SideTag::Right] {
            if is_parallel_side(alg, m, n, side)? != is_parallel_side(&alt, m, n, side)? {
                disagreements.push((m.clone(), n.clone(), side));
            }
        }
    }
    Ok(HeReport { identities_hold, pairs_checked: pairs.len(), disagreements })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::TableAlgebra;
    use crate::linalg::LinearMap;
    use num_bigint::BigInt;

    fn q(c: [i64; 4]) -> Q {
        Quaternion::from_ints(c)
    }
    fn sp(vs: &[[i64; 4]]) -> S {
        Subspace::span(&vs.iter().map(|c| q(*c)).collect::<Vec<_>>())
    }
    fn key(d: i64) -> OrbitKey {
        OrbitKey::new(BigInt::from(d)).unwrap()
    }
    const ONE: [i64; 4] = [1, 0, 0, 0];
    const I: [i64; 4] = [0, 1, 0, 0];
    const J: [i64; 4] = [0, 0, 1, 0];
    const K: [i64; 4] = [0, 0, 0, 1];

    fn proper() -> CliffordLikeParallelism<QuaternionAlgebra> {
        build_parallelism(QuaternionAlgebra::hamilton(), BTreeMap::from([(key(-1), SideTag::Left)]), SideTag::Right).unwrap()
    }
    fn uniform(side: SideTag) -> CliffordLikeParallelism<QuaternionAlgebra> {
        build_parallelism(QuaternionAlgebra::hamilton(), BTreeMap::new(), side).unwrap()
    }

    #[test]
    fn build_worked() {
        assert!(!uniform(SideTag::Left).is_proper().unwrap());
        assert!(!uniform(SideTag::Right).is_proper().unwrap());
        assert!(proper().is_proper().unwrap());
        let unrealized = build_parallelism(
            QuaternionAlgebra::hamilton(),
            BTreeMap::from([(key(-7), SideTag::Left)]),
            SideTag::Right,
        )
        .unwrap();
        assert!(!unrealized.is_proper().unwrap());
        let b = QuarticExtension::standard();
        assert!(build_parallelism(b.clone(), BTreeMap::from([(key(-1), SideTag::Left)]), SideTag::Right).is_err());
        assert!(build_parallelism(b, BTreeMap::new(), SideTag::Right).is_ok());
    }

    #[test]
    fn is_parallel_worked() {
        let m = sp(&[ONE, I]);
        let n = sp(&[[1, 0, 1, 0], [0, 1, 0, -1]]);
        assert!(proper().is_parallel(&m, &n).unwrap());
        assert!(!uniform(SideTag::Right).is_parallel(&m, &n).unwrap());
        assert!(uniform(SideTag::Left).is_parallel(&m, &n).unwrap());
        for cl in [proper(), uniform(SideTag::Left), uniform(SideTag::Right)] {
            assert!(cl.is_parallel(&n, &n).unwrap());
        }
    }

    #[test]
    fn lambda_fixes_worked() {
        assert!(uniform(SideTag::Left).lambda_fixes_all_classes(&q(I)).unwrap().fixes());
        assert!(proper().lambda_fixes_all_classes(&q([5, 0, 0, 0])).unwrap().fixes());
        let cl = proper();
        match cl.lambda_fixes_all_classes(&q(I)).unwrap() {
            FixVerdict::Moves { witness, key: k } => {
                assert_ne!(k, key(-1));
                assert!(cl.audit_witness(&q(I), SideTag::Left, &witness).unwrap());
                assert!(!witness.is_subspace_of(&sp(&[ONE, J, K])));
            }
            FixVerdict::Fixes => panic!("proper tagging has moved classes"),
        }
        assert!(cl.lambda_fixes_all_classes(&Quaternion::zero()).is_err());
    }

    #[test]
    fn rho_fixes_worked() {
        assert!(uniform(SideTag::Right).rho_fixes_all_classes(&q(I)).unwrap().fixes());
        let cl = proper();
        match cl.rho_fixes_all_classes(&q(I)).unwrap() {
            FixVerdict::Moves { witness, key: k } => {
                assert_eq!(k, key(-1));
                assert!(cl.audit_witness(&q(I), SideTag::Right, &witness).unwrap());
            }
            FixVerdict::Fixes => panic!("left-tagged orbit -1 is infinite"),
        }
        assert!(cl.rho_fixes_all_classes(&q([-2, 0, 0, 0])).unwrap().fixes());
    }

    #[test]
    fn default_left_with_right_exception() {
        let cl = build_parallelism(
            QuaternionAlgebra::hamilton(),
            BTreeMap::from([(key(-3), SideTag::Right)]),
            SideTag::Left,
        )
        .unwrap();
        for g in [q(I), q([1, 2, -1, 0]), q([0, 1, 1, 1])] {
            match cl.lambda_fixes_all_classes(&g).unwrap() {
                FixVerdict::Moves { witness, key: k } => {
                    assert_eq!(k, key(-3));
                    assert!(cl.audit_witness(&g, SideTag::Left, &witness).unwrap());
                }
                FixVerdict::Fixes => panic!("orbit -3 is tagged right"),
            }
        }
    }

    #[test]
    fn single_class_worked() {
        let h = QuaternionAlgebra::hamilton();
        let samples = [q([1, 2, 0, 0]), q([0, 1, 1, 0]), q([3, -1, 2, 5]), q(J)];
        let p = single_class_fixer_profile(&h, &q([1, 1, 0, 0]), &samples).unwrap();
        assert_eq!(p.class, sp(&[ONE, I]));
        assert!(p.holds());
        let p = single_class_fixer_profile(&h, &q([1, 2, 3, 0]), &samples).unwrap();
        assert_eq!(p.class, sp(&[ONE, [0, 2, 3, 0]]));
        assert!(p.holds());
        assert!(single_class_fixer_profile(&h, &q(I), &samples).is_err());
    }

    #[test]
    fn prop_two_worked() {
        let h = QuaternionAlgebra::hamilton();
        let samples = [q([1, 1, 1, 0])];
        assert!(matches!(prop_two_check(&h, &h, &samples).unwrap(), PropTwoVerdict::Identical { .. }));

        // inner automorphism by 1+k: fixes 1, maps span(1,i) and span(1,j) into the star
        let phi = h.inner_map(&q([1, 0, 0, 1])).unwrap();
        let pulled = TableAlgebra::pullback(&h, &phi).unwrap();
        assert!(matches!(prop_two_check(&h, &pulled, &samples).unwrap(), PropTwoVerdict::Identical { .. }));

        // fixes 1 and i, sends j to j + k and k to 2k: not an automorphism
        let phi = LinearMap::from_images([q(ONE), q(I), q([0, 0, 1, 1]), q([0, 0, 0, 2])]);
        let pulled = TableAlgebra::pullback(&h, &phi).unwrap();
        let verdict = prop_two_check(&h, &pulled, &samples).unwrap();
        assert!(matches!(verdict, PropTwoVerdict::Inconclusive { .. }), "{verdict:?}");

        let alt = AlteredAlgebra::new(&h, q(I)).unwrap();
        assert!(prop_two_check(&h, &alt, &samples).is_err());
    }

    #[test]
    fn he_worked() {
        let h = QuaternionAlgebra::hamilton();
        let m = sp(&[[1, 2, 0, 1], [0, 1, -1, 3]]);
        let pairs: Vec<(S, S)> = vec![
            (m.clone(), m.left_mul(&h, &q([2, 1, 0, 1]))),
            (m.clone(), m.right_mul(&h, &q([0, 1, 1, 0]))),
            (m.clone(), sp(&[J, K])),
        ];
        for e in [q(ONE), q(I), q([1, 0, 1, 0])] {
            let r = he_double_space_check(&h, &e, &pairs).unwrap();
            assert!(r.holds(), "{e:?}: {r:?}");
        }
        assert!(he_double_space_check(&h, &Quaternion::zero(), &pairs).is_err());
    }
}
