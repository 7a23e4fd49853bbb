//! The verification suites.
//!
//! A suite draws all of its cases from its own stream first and then
//! evaluates them in parallel; the first failing case in draw order is the
//! reported counterexample.

use std::time::Instant;

use cliffpar_core::algebra::{skolem_noether_decompose, AlgebraKind, TableAlgebra};
use cliffpar_core::cliffordlike::{
    he_double_space_check, prop_two_check, single_class_fixer_profile, tables_identical,
};
use cliffpar_core::orbits::{
    lines_conjugate, omega, orbit_lines_in_plane, point_in_orbit, polar_gram_determinant, quadric_meets_line,
    InnerOrbits, QuadricMeet,
};
use cliffpar_core::parallel::{
    ds_check, invariant_classes, is_invariant_class, is_parallel_side, left_class_kernel, line_through_in_class,
    remark_cases_profile, right_class_kernel, translation_fixes_line,
};
use cliffpar_core::text::{format_quaternion, format_subspace, parse_quaternion};
use cliffpar_core::{
    build_parallelism, CliffordLikeParallelism, DsOutcome, Error, Field, FixVerdict, FourAlgebra, LinearMap,
    PropTwoVerdict, QuarticExtension, Quaternion, QuaternionAlgebra, Rational, Result, SideTag, Subspace,
};
use rand::RngExt;
use rayon::prelude::*;

use crate::config::{AlgebraChoice, SuiteConfig, Tagging};
use crate::report::{CheckRecord, Verdict};
use crate::sample::{self, suite_rng, SampleScalar, SuiteRng};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    Nonzero,
    Nonscalar,
    /// Outside F·1 with nonzero trace.
    NonscalarTraced,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KeyKind {
    Count,
    Elements(Rule),
}

#[derive(Debug)]
pub struct KeySpec {
    pub name: &'static str,
    pub kind: KeyKind,
    pub default_a: &'static str,
    pub default_b: &'static str,
}

#[derive(Debug)]
pub struct SuiteSpec {
    pub name: &'static str,
    pub case_a_only: bool,
    pub keys: &'static [KeySpec],
}

const fn count(name: &'static str, default: &'static str) -> KeySpec {
    KeySpec { name, kind: KeyKind::Count, default_a: default, default_b: default }
}

const fn elements(name: &'static str, rule: Rule, default_a: &'static str, default_b: &'static str) -> KeySpec {
    KeySpec { name, kind: KeyKind::Elements(rule), default_a, default_b }
}

pub const SUITES: &[SuiteSpec] = &[
    SuiteSpec { name: "ds", case_a_only: false, keys: &[count("samples", "1000")] },
    SuiteSpec {
        name: "parallel-axioms",
        case_a_only: false,
        keys: &[count("samples", "200"), count("competitors", "20"), count("triples", "200")],
    },
    SuiteSpec {
        name: "conjugacy",
        case_a_only: true,
        keys: &[count("samples", "300"), count("non_conjugate", "300")],
    },
    SuiteSpec {
        name: "orbit-quadric",
        case_a_only: true,
        keys: &[
            elements("elements", Rule::NonscalarTraced, "1 + i, 2 + j, 1 + i + j + k", ""),
            count("samples", "100"),
            count("lines", "100"),
        ],
    },
    SuiteSpec {
        name: "line-orbit-density",
        case_a_only: true,
        keys: &[elements("generator", Rule::Nonscalar, "i", ""), count("planes", "20"), count("lines", "25")],
    },
    SuiteSpec {
        name: "invariant-classes",
        case_a_only: true,
        keys: &[elements("elements", Rule::Nonscalar, "i, 1 + i, 1 + 2*i + 3*j, j + k", ""), count("samples", "500")],
    },
    SuiteSpec { name: "kernel", case_a_only: false, keys: &[count("samples", "200")] },
    SuiteSpec {
        name: "he-double-space",
        case_a_only: false,
        keys: &[elements("elements", Rule::Nonzero, "i, 1 + j", "u, 1 + v"), count("samples", "200")],
    },
    SuiteSpec { name: "prop-two", case_a_only: false, keys: &[count("samples", "20")] },
    SuiteSpec { name: "thm-main", case_a_only: true, keys: &[count("samples", "50"), count("scalars", "10")] },
    SuiteSpec { name: "thm-new1", case_a_only: true, keys: &[count("samples", "50"), count("lines", "20")] },
    SuiteSpec { name: "thm-new2", case_a_only: false, keys: &[count("samples", "50")] },
    SuiteSpec {
        name: "case-b",
        case_a_only: false,
        keys: &[count("squares", "500"), count("pairs", "200"), count("triangles", "200")],
    },
    SuiteSpec {
        name: "skolem-noether",
        case_a_only: false,
        keys: &[count("samples", "100"), count("non_multiplicative", "10")],
    },
];

pub fn suite_spec(name: &str) -> Option<&'static SuiteSpec> {
    SUITES.iter().find(|s| s.name == name)
}

/// Evaluate `pass` on every case; a case passes on `Ok(true)`.
///
/// Resource errors make the check inconclusive, any other error fails it.
pub fn run_check<T: Sync>(
    name: impl Into<String>,
    cases: &[T],
    describe: impl Fn(&T) -> String,
    pass: impl Fn(&T) -> Result<bool> + Sync,
) -> CheckRecord {
    let start = Instant::now();
    let results: Vec<Result<bool>> = cases.par_iter().map(&pass).collect();
    let mut record = CheckRecord {
        check: name.into(),
        verdict: Verdict::Pass,
        samples: cases.len() as u64,
        counterexample: None,
        reason: None,
        elapsed: None,
    };
    let failed = results.iter().position(|r| match r {
        Ok(ok) => !ok,
        Err(Error::Resource(_)) => false,
        Err(_) => true,
    });
    if let Some(n) = failed {
        record.verdict = Verdict::Fail;
        record.counterexample = Some(describe(&cases[n]));
        if let Err(e) = &results[n] {
            record.reason = Some(e.to_string());
        }
    } else if let Some(Err(e)) = results.iter().find(|r| r.is_err()) {
        record.verdict = Verdict::Inconclusive;
        record.reason = Some(e.to_string());
    }
    record.elapsed = Some(start.elapsed());
    record
}

fn fq<A: FourAlgebra>(alg: &A, x: &Quaternion<A::Scalar>) -> String {
    format_quaternion(alg, x)
}

fn fs<A: FourAlgebra>(alg: &A, s: &Subspace<A::Scalar>) -> String {
    format_subspace(alg, s)
}

fn parse_all<A: FourAlgebra>(alg: &A, items: &[String]) -> Vec<Quaternion<A::Scalar>> {
    items.iter().map(|s| parse_quaternion(alg, s).expect("validated with the config")).collect()
}

/// Run one suite of the configuration.
pub fn run_suite(cfg: &SuiteConfig, name: &str) -> Vec<CheckRecord> {
    let mut rng = suite_rng(cfg.seed, name);
    let h = cfg.height_bound;
    match (&cfg.algebra, name) {
        (AlgebraChoice::CaseA(alg), "ds") => ds_checks(alg, &mut rng, cfg.count(name, "samples"), h),
        (AlgebraChoice::CaseB(alg), "ds") => ds_checks(alg, &mut rng, cfg.count(name, "samples"), h),
        (AlgebraChoice::CaseA(alg), "parallel-axioms") => parallel_axioms(alg, cfg, &mut rng),
        (AlgebraChoice::CaseB(alg), "parallel-axioms") => parallel_axioms(alg, cfg, &mut rng),
        (AlgebraChoice::CaseA(alg), "conjugacy") => conjugacy(alg, cfg, &mut rng),
        (AlgebraChoice::CaseA(alg), "orbit-quadric") => orbit_quadric(alg, cfg, &mut rng),
        (AlgebraChoice::CaseA(alg), "line-orbit-density") => line_orbit_density(alg, cfg, &mut rng),
        (AlgebraChoice::CaseA(alg), "invariant-classes") => invariant_class_checks(alg, cfg, &mut rng),
        (AlgebraChoice::CaseA(alg), "kernel") => kernel(alg, cfg, &mut rng),
        (AlgebraChoice::CaseB(alg), "kernel") => kernel(alg, cfg, &mut rng),
        (AlgebraChoice::CaseA(alg), "he-double-space") => he_double_space(alg, cfg, &mut rng),
        (AlgebraChoice::CaseB(alg), "he-double-space") => he_double_space(alg, cfg, &mut rng),
        (AlgebraChoice::CaseA(alg), "prop-two") => prop_two(alg, cfg, &mut rng),
        (AlgebraChoice::CaseB(alg), "prop-two") => prop_two(alg, cfg, &mut rng),
        (AlgebraChoice::CaseA(alg), "thm-main") => thm_main(alg, cfg, &mut rng),
        (AlgebraChoice::CaseA(alg), "thm-new1") => thm_new1(alg, cfg, &mut rng),
        (_, "thm-new2") => thm_new2(cfg, &mut rng),
        (_, "case-b") => case_b(cfg, &mut rng),
        (AlgebraChoice::CaseA(alg), "skolem-noether") => skolem_noether(alg, cfg, &mut rng),
        (AlgebraChoice::CaseB(alg), "skolem-noether") => skolem_noether(alg, cfg, &mut rng),
        _ => vec![CheckRecord {
            check: name.to_string(),
            verdict: Verdict::Inconclusive,
            samples: 0,
            counterexample: None,
            reason: Some("suite does not apply to this algebra".into()),
            elapsed: None,
        }],
    }
}

// ---- (DS) ----

/// The worked triangle (F1, Fe1, Fe2) with common point Fe3, and random triangles.
///
/// Generic over the product so that corrupted tables can be fed in.
pub fn ds_checks<A>(alg: &A, rng: &mut SuiteRng, samples: usize, h: u64) -> Vec<CheckRecord>
where
    A: FourAlgebra,
    A::Scalar: SampleScalar,
{
    let describe = |t: &[Subspace<A::Scalar>; 3]| {
        t.iter().map(|p| fq(alg, &p.representative().expect("a point"))).collect::<Vec<_>>().join(" | ")
    };
    let worked = [[Subspace::point(&Quaternion::basis(0)), Subspace::point(&Quaternion::basis(1)), Subspace::point(&Quaternion::basis(2))]];
    let expected = Subspace::point(&Quaternion::basis(3));
    let triangles: Vec<_> = (0..samples).map(|_| sample::triangle(rng, h)).collect();
    vec![
        run_check("ds/worked-triangle", &worked, describe, |[p0, p1, p2]| {
            Ok(ds_check(alg, p0, p1, p2)? == DsOutcome::Common(expected.clone()))
        }),
        run_check("ds/random-triangles", &triangles, describe, |[p0, p1, p2]| {
            Ok(!ds_check(alg, p0, p1, p2)?.is_violation())
        }),
    ]
}

// ---- parallelism axioms ----

#[derive(Clone)]
enum Member<F: Field> {
    Class,
    Side(SideTag),
    Free(Quaternion<F>),
}

fn member_line<A: InnerOrbits + Clone>(
    cl: &CliffordLikeParallelism<A>,
    l: &Subspace<A::Scalar>,
    p: &Subspace<A::Scalar>,
    m: &Member<A::Scalar>,
) -> Result<Subspace<A::Scalar>> {
    let alg = cl.algebra();
    match m {
        Member::Class => line_through_in_class(alg, p, l, cl.tag_of(l)?),
        Member::Side(s) => line_through_in_class(alg, p, l, *s),
        Member::Free(q) => {
            let n = p.join(&Subspace::point(q));
            if n.is_line() {
                Ok(n)
            } else {
                line_through_in_class(alg, p, l, cl.tag_of(l)?)
            }
        }
    }
}

fn parallel_axioms<A>(alg: &A, cfg: &SuiteConfig, rng: &mut SuiteRng) -> Vec<CheckRecord>
where
    A: InnerOrbits + Clone,
    A::Scalar: SampleScalar,
{
    let h = cfg.height_bound;
    let mut out = Vec::new();
    for tagging in &cfg.taggings {
        let cl = match build_parallelism(alg.clone(), tagging.exceptions.clone(), tagging.default) {
            Ok(cl) => cl,
            Err(e) => {
                out.push(failed_setup(format!("parallel-axioms[{}]", tagging.label()), e));
                continue;
            }
        };
        let label = tagging.label();
        let through: Vec<_> = (0..cfg.count("parallel-axioms", "samples"))
            .map(|_| {
                let p = sample::point(rng, h);
                let l = sample::star_line(alg, rng, h);
                let competitors: Vec<Quaternion<A::Scalar>> =
                    (0..cfg.count("parallel-axioms", "competitors")).map(|_| sample::nonzero(rng, h)).collect();
                (p, l, competitors)
            })
            .collect();
        out.push(run_check(
            format!("parallel-axioms[{label}]/through-line"),
            &through,
            |(p, l, _)| format!("{} | {}", fs(alg, p), fs(alg, l)),
            |(p, l, competitors)| {
                let m = line_through_in_class(alg, p, l, cl.tag_of(l)?)?;
                if !(m.is_line() && p.is_subspace_of(&m) && cl.is_parallel(&m, l)? && cl.is_parallel(l, &m)?) {
                    return Ok(false);
                }
                for q in competitors {
                    let n = p.join(&Subspace::point(q));
                    if n.is_line() && n != m && cl.is_parallel(&n, l)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            },
        ));
        let triples: Vec<_> = (0..cfg.count("parallel-axioms", "triples"))
            .map(|_| {
                let l = sample::star_line(alg, rng, h);
                let members: [(Subspace<A::Scalar>, Member<A::Scalar>); 3] = std::array::from_fn(|_| {
                    let p = sample::point(rng, h);
                    let m = match rng.random_range(0..4) {
                        0 => Member::Class,
                        1 => Member::Side(SideTag::Left),
                        2 => Member::Side(SideTag::Right),
                        _ => Member::Free(sample::nonzero(rng, h)),
                    };
                    (p, m)
                });
                (l, members)
            })
            .collect();
        let lines = |(l, members): &(Subspace<A::Scalar>, [(Subspace<A::Scalar>, Member<A::Scalar>); 3])| {
            members.iter().map(|(p, m)| member_line(&cl, l, p, m)).collect::<Result<Vec<_>>>()
        };
        let describe = |t: &(Subspace<A::Scalar>, [(Subspace<A::Scalar>, Member<A::Scalar>); 3])| {
            lines(t)
                .map(|ls| ls.iter().map(|x| fs(alg, x)).collect::<Vec<_>>().join(" | "))
                .unwrap_or_else(|e| e.to_string())
        };
        out.push(run_check(format!("parallel-axioms[{label}]/equivalence"), &triples, describe, |t| {
            let ls = lines(t)?;
            let mut rel = [[false; 3]; 3];
            for a in 0..3 {
                for b in 0..3 {
                    rel[a][b] = cl.is_parallel(&ls[a], &ls[b])?;
                }
            }
            let reflexive = (0..3).all(|a| rel[a][a]);
            let symmetric = (0..3).all(|a| (0..3).all(|b| rel[a][b] == rel[b][a]));
            let transitive =
                (0..3).all(|a| (0..3).all(|b| (0..3).all(|c| !(rel[a][b] && rel[b][c]) || rel[a][c])));
            Ok(reflexive && symmetric && transitive)
        }));
        out.push(run_check(format!("parallel-axioms[{label}]/refines-left-or-right"), &triples, describe, |t| {
            let ls = lines(t)?;
            for a in 0..3 {
                for b in 0..3 {
                    if cl.is_parallel(&ls[a], &ls[b])?
                        && !is_parallel_side(alg, &ls[a], &ls[b], SideTag::Left)?
                        && !is_parallel_side(alg, &ls[a], &ls[b], SideTag::Right)?
                    {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }));
    }
    out
}

fn failed_setup(check: String, e: Error) -> CheckRecord {
    CheckRecord {
        check,
        verdict: if matches!(e, Error::Resource(_)) { Verdict::Inconclusive } else { Verdict::Fail },
        samples: 0,
        counterexample: None,
        reason: Some(e.to_string()),
        elapsed: None,
    }
}

// ---- conjugacy of elements ----

type Q = Quaternion<Rational>;
type S = Subspace<Rational>;

fn conjugacy(alg: &QuaternionAlgebra, cfg: &SuiteConfig, rng: &mut SuiteRng) -> Vec<CheckRecord> {
    let h = cfg.height_bound;
    let conj = |q: &Q, c: &Q| -> Result<Q> { Ok(alg.mul(&alg.mul(&alg.inverse(c)?, q), c)) };
    let pairs: Vec<(Q, Q)> = (0..cfg.count("conjugacy", "samples"))
        .map(|_| (sample::nonscalar(alg, rng, h), sample::nonzero(rng, h)))
        .collect();
    let pairs: Vec<(Q, Q)> = pairs
        .into_iter()
        .map(|(q, c)| {
            let q2 = conj(&q, &c).expect("nonzero elements are invertible");
            (q, q2)
        })
        .collect();
    let describe = |(q1, q2): &(Q, Q)| format!("{} | {}", fq(alg, q1), fq(alg, q2));
    let mut out = vec![run_check("conjugacy/conjugate-pairs", &pairs, describe, |(q1, q2)| {
        let Some(c) = alg.conjugator(q1, q2) else { return Ok(false) };
        Ok(!c.is_zero()
            && conj(q1, &c)? == *q2
            && lines_conjugate(alg, &Subspace::span([&alg.unit(), q1]), &Subspace::span([&alg.unit(), q2]))?)
    })];
    let half = Rational::new(1, 2).expect("nonzero denominator");
    let perturbed: Vec<(Q, Q)> = (0..cfg.count("conjugacy", "non_conjugate"))
        .map(|n| {
            let q = sample::nonscalar(alg, rng, h);
            let q2 = conj(&q, &sample::nonzero(rng, h)).expect("invertible");
            let q2 = if n % 2 == 0 {
                q2 + Quaternion::scalar(sample::nonzero_scalar(rng, h))
            } else {
                let lambda: Rational = loop {
                    let x: Rational = sample::nonzero_scalar(rng, h);
                    if !(x.clone() * x.clone()).is_one() {
                        break x;
                    }
                };
                let t = Quaternion::scalar(alg.trace(&q2) * half.clone());
                let pure = q2 - t.clone();
                t + pure.scale(&lambda)
            };
            (q, q2)
        })
        .collect();
    out.push(run_check("conjugacy/non-conjugate-pairs", &perturbed, describe, |(q1, q2)| {
        Ok(!alg.are_conjugate(q1, q2) && alg.conjugator(q1, q2).is_none())
    }));
    out
}

// ---- point orbits and the quadric ω_q = 0 ----

fn orbit_quadric(alg: &QuaternionAlgebra, cfg: &SuiteConfig, rng: &mut SuiteRng) -> Vec<CheckRecord> {
    let h = cfg.height_bound;
    let mut out = Vec::new();
    for (text, q) in cfg.elements("orbit-quadric", "elements").iter().zip(parse_all(alg, &cfg.elements("orbit-quadric", "elements"))) {
        let conjugators: Vec<Q> = (0..cfg.count("orbit-quadric", "samples")).map(|_| sample::nonzero(rng, h)).collect();
        out.push(run_check(format!("orbit-quadric[{text}]/orbit-points"), &conjugators, |c| fq(alg, c), |c| {
            let p = alg.mul(&alg.mul(&alg.inverse(c)?, &q), c);
            point_in_orbit(alg, &q, &Subspace::point(&p))
        }));
        let single = [q.clone()];
        out.push(run_check(format!("orbit-quadric[{text}]/omega-at-one"), &single, |q| fq(alg, q), |q| {
            Ok(!omega(alg, q, &alg.unit())?.is_zero())
        }));
        out.push(run_check(format!("orbit-quadric[{text}]/polar-form-nondegenerate"), &single, |q| fq(alg, q), |q| {
            Ok(!polar_gram_determinant(alg, q)?.is_zero())
        }));
        let lines: Vec<S> = (0..cfg.count("orbit-quadric", "lines")).map(|_| sample::star_line(alg, rng, h)).collect();
        out.push(run_check(format!("orbit-quadric[{text}]/star-lines-meet-0-or-2"), &lines, |l| fs(alg, l), |l| {
            Ok(matches!(quadric_meets_line(alg, &q, l)?, QuadricMeet::Points(0) | QuadricMeet::Points(2)))
        }));
    }
    out
}

// ---- orbit lines in planes ----

fn line_orbit_density(alg: &QuaternionAlgebra, cfg: &SuiteConfig, rng: &mut SuiteRng) -> Vec<CheckRecord> {
    let h = cfg.height_bound;
    let generator = parse_all(alg, &cfg.elements("line-orbit-density", "generator")).remove(0);
    let base = Subspace::span([&alg.unit(), &generator]);
    let k = cfg.count("line-orbit-density", "lines");
    let planes: Vec<(S, S)> = (0..cfg.count("line-orbit-density", "planes"))
        .map(|_| {
            let c = sample::nonzero(rng, h);
            let l = base.image(&alg.inner_map(&c).expect("invertible"));
            loop {
                let e = l.join(&sample::point(rng, h));
                if e.is_plane() {
                    break (l, e);
                }
            }
        })
        .collect();
    vec![run_check(
        format!("line-orbit-density[{}]/orbit-lines-per-plane", fq(alg, &generator)),
        &planes,
        |(l, e)| format!("{} | {}", fs(alg, l), fs(alg, e)),
        |(l, e)| {
            let lines = orbit_lines_in_plane(alg, l, e, k)?;
            let distinct = lines.iter().enumerate().all(|(n, a)| lines[..n].iter().all(|b| a != b));
            let mut ok = lines.len() >= k && distinct;
            for m in &lines {
                ok &= m.is_star_line(alg) && m.is_subspace_of(e) && lines_conjugate(alg, m, &base)?;
            }
            Ok(ok)
        },
    )]
}

// ---- translation-invariant classes ----

fn invariant_class_checks(alg: &QuaternionAlgebra, cfg: &SuiteConfig, rng: &mut SuiteRng) -> Vec<CheckRecord> {
    let h = cfg.height_bound;
    let mut out = Vec::new();
    let texts = cfg.elements("invariant-classes", "elements");
    for (text, g) in texts.iter().zip(parse_all(alg, &texts)) {
        for side in [SideTag::Right, SideTag::Left] {
            let name = format!("invariant-classes[{text}]/{side}-classes");
            let profile = match invariant_classes(alg, &g, side) {
                Ok(p) => p,
                Err(e) => {
                    out.push(failed_setup(name, e));
                    continue;
                }
            };
            let lines: Vec<S> = (0..cfg.count("invariant-classes", "samples"))
                .map(|_| match (rng.random_range(0..8), &profile.pencil_plane) {
                    (0, _) => profile.exceptional_line.clone(),
                    (1 | 2, Some(plane)) => {
                        let l = Subspace::span([&alg.unit(), &sample::vector_in(rng, h, plane)]);
                        if l.is_line() { l } else { sample::star_line(alg, rng, h) }
                    }
                    _ => sample::star_line(alg, rng, h),
                })
                .collect();
            out.push(run_check(name, &lines, |l| fs(alg, l), |l| {
                Ok(is_invariant_class(alg, &g, l, side)? == profile.predicts(l))
            }));
        }
        out.push(run_check(format!("invariant-classes[{text}]/remark-cases"), &[g.clone()], |g| fq(alg, g), |g| {
            Ok(remark_cases_profile(alg, g)?.consistent)
        }));
    }
    out
}

// ---- kernels of spreads ----

fn kernel<A>(alg: &A, cfg: &SuiteConfig, rng: &mut SuiteRng) -> Vec<CheckRecord>
where
    A: FourAlgebra,
    A::Scalar: SampleScalar,
{
    let h = cfg.height_bound;
    type Case<F> = (Subspace<F>, Quaternion<F>, [F; 2], Quaternion<F>);
    let cases: Vec<Case<A::Scalar>> = (0..cfg.count("kernel", "samples"))
        .map(|_| {
            let m = sample::line(rng, h);
            let c = sample::nonzero(rng, h);
            let coeffs = loop {
                let ab: [A::Scalar; 2] = [sample::scalar(rng, h), sample::scalar(rng, h)];
                if !(ab[0].is_zero() && ab[1].is_zero()) {
                    break ab;
                }
            };
            (m, c, coeffs, sample::nonscalar(alg, rng, h))
        })
        .collect();
    let describe = |(m, c, [a, b], g): &Case<A::Scalar>| {
        format!("{} | {} | {} | {} | {}", fs(alg, m), fq(alg, c), a, b, fq(alg, g))
    };
    let in_line = |l: &Subspace<A::Scalar>, [a, b]: &[A::Scalar; 2]| {
        let basis = l.basis();
        basis[0].scale(a) + basis[1].scale(b)
    };
    vec![
        run_check("kernel/right-classes-fixed-by-left-translations", &cases, describe, |(m, c, ab, _)| {
            let g = in_line(&right_class_kernel(alg, m)?, ab);
            Ok(translation_fixes_line(alg, &g, SideTag::Left, &m.right_mul(alg, c)))
        }),
        run_check("kernel/left-classes-fixed-by-right-translations", &cases, describe, |(m, c, ab, _)| {
            let g = in_line(&left_class_kernel(alg, m)?, ab);
            Ok(translation_fixes_line(alg, &g, SideTag::Right, &m.left_mul(alg, c)))
        }),
        run_check("kernel/nothing-else", &cases, describe, |(m, _, _, g)| {
            let l = right_class_kernel(alg, m)?;
            let r = left_class_kernel(alg, m)?;
            Ok((l.contains(g) || !translation_fixes_line(alg, g, SideTag::Left, &l))
                && (r.contains(g) || !translation_fixes_line(alg, g, SideTag::Right, &r)))
        }),
    ]
}

// ---- the double space of H^e ----

/// A line and a second line that is left parallel, right parallel or random.
fn related_pair<A, R>(rng: &mut R, h: u64, alg: &A) -> (Subspace<A::Scalar>, Subspace<A::Scalar>)
where
    A: FourAlgebra,
    A::Scalar: SampleScalar,
    R: rand::Rng + ?Sized,
{
    let m = sample::line(rng, h);
    let n = match rng.random_range(0..3) {
        0 => m.left_mul(alg, &sample::nonzero(rng, h)),
        1 => m.right_mul(alg, &sample::nonzero(rng, h)),
        _ => sample::line(rng, h),
    };
    (m, n)
}

fn he_double_space<A>(alg: &A, cfg: &SuiteConfig, rng: &mut SuiteRng) -> Vec<CheckRecord>
where
    A: FourAlgebra,
    A::Scalar: SampleScalar,
{
    let h = cfg.height_bound;
    let mut out = Vec::new();
    let texts = cfg.elements("he-double-space", "elements");
    for (text, e) in texts.iter().zip(parse_all(alg, &texts)) {
        out.push(run_check(format!("he-double-space[{text}]/translation-identities"), &[e.clone()], |e| fq(alg, e), |e| {
            Ok(he_double_space_check(alg, e, &[])?.identities_hold)
        }));
        let pairs: Vec<_> = (0..cfg.count("he-double-space", "samples")).map(|_| related_pair(rng, h, alg)).collect();
        out.push(run_check(
            format!("he-double-space[{text}]/parallelisms-agree"),
            &pairs,
            |(m, n)| format!("{} | {}", fs(alg, m), fs(alg, n)),
            |pair| Ok(he_double_space_check(alg, &e, std::slice::from_ref(pair))?.disagreements.is_empty()),
        ));
    }
    out
}

// ---- two common right classes force equal products ----

fn prop_two<A>(alg: &A, cfg: &SuiteConfig, rng: &mut SuiteRng) -> Vec<CheckRecord>
where
    A: FourAlgebra,
    A::Scalar: SampleScalar,
{
    let h = cfg.height_bound;
    let n = cfg.count("prop-two", "samples");
    let candidates: Vec<Quaternion<A::Scalar>> = (0..8).map(|_| sample::nonscalar(alg, rng, h)).collect();
    let mut out = vec![run_check("prop-two/same-product", &[()], |_| String::new(), |_| {
        Ok(matches!(prop_two_check(alg, alg, &candidates)?, PropTwoVerdict::Identical { .. }))
    })];
    if alg.kind() == AlgebraKind::CaseA {
        let conjugators: Vec<_> = (0..n).map(|_| sample::nonzero(rng, h)).collect();
        out.push(run_check("prop-two/inner-pullback", &conjugators, |c| fq(alg, c), |c| {
            let t = TableAlgebra::pullback(alg, &alg.inner_map(c)?)?;
            Ok(matches!(prop_two_check(alg, &t, &candidates)?, PropTwoVerdict::Identical { .. }))
        }));
    }
    let maps: Vec<LinearMap<A::Scalar>> = (0..n)
        .map(|_| loop {
            let phi = LinearMap::from_images([alg.unit(), sample::element(rng, h), sample::element(rng, h), sample::element(rng, h)]);
            if phi.is_invertible() {
                break phi;
            }
        })
        .collect();
    out.push(run_check("prop-two/linear-pullback", &maps, |m| format!("{m:?}"), |phi| {
        let t = TableAlgebra::pullback(alg, phi)?;
        Ok(match prop_two_check(alg, &t, &candidates)? {
            PropTwoVerdict::Violation { .. } => false,
            PropTwoVerdict::Identical { .. } => tables_identical(alg, &t),
            PropTwoVerdict::Inconclusive { .. } => true,
        })
    }));
    out
}

// ---- Clifford iff some translation fixes all classes ----

fn thm_main(alg: &QuaternionAlgebra, cfg: &SuiteConfig, rng: &mut SuiteRng) -> Vec<CheckRecord> {
    let h = cfg.height_bound;
    let mut taggings = vec![Tagging::uniform(SideTag::Left), Tagging::uniform(SideTag::Right)];
    for t in &cfg.taggings {
        if !taggings.contains(t) {
            taggings.push(t.clone());
        }
    }
    let mut out = Vec::new();
    for tagging in &taggings {
        let label = tagging.label();
        let cl = match build_parallelism(alg.clone(), tagging.exceptions.clone(), tagging.default) {
            Ok(cl) => cl,
            Err(e) => {
                out.push(failed_setup(format!("thm-main[{label}]"), e));
                continue;
            }
        };
        for translation in [SideTag::Left, SideTag::Right] {
            let name = match translation {
                SideTag::Left => "lambda",
                SideTag::Right => "rho",
            };
            let cases: Vec<(Q, [S; 2])> = (0..cfg.count("thm-main", "samples"))
                .map(|_| (sample::nonscalar(alg, rng, h), [sample::line(rng, h), sample::line(rng, h)]))
                .collect();
            out.push(run_check(format!("thm-main[{label}]/{name}-nonscalar"), &cases, |(g, _)| fq(alg, g), |(g, lines)| {
                translation_verdict_holds(&cl, g, translation, lines)
            }));
        }
        let scalars: Vec<(Q, [S; 2])> = (0..cfg.count("thm-main", "scalars"))
            .map(|_| (Quaternion::scalar(sample::nonzero_scalar(rng, h)), [sample::line(rng, h), sample::line(rng, h)]))
            .collect();
        out.push(run_check(format!("thm-main[{label}]/scalars"), &scalars, |(g, _)| fq(alg, g), |(g, lines)| {
            Ok(translation_verdict_holds(&cl, g, SideTag::Left, lines)?
                && translation_verdict_holds(&cl, g, SideTag::Right, lines)?
                && cl.lambda_fixes_all_classes(g)?.fixes()
                && cl.rho_fixes_all_classes(g)?.fixes())
        }));
    }
    out
}

/// A translation fixes every class iff g ∈ F or no realized orbit is tagged
/// with the opposite side; a fix is spot-checked on sample lines and a
/// move must come with an audited witness.
fn translation_verdict_holds(
    cl: &CliffordLikeParallelism<QuaternionAlgebra>,
    g: &Q,
    translation: SideTag,
    lines: &[S],
) -> Result<bool> {
    let alg = cl.algebra();
    let verdict = match translation {
        SideTag::Left => cl.lambda_fixes_all_classes(g)?,
        SideTag::Right => cl.rho_fixes_all_classes(g)?,
    };
    let expect_fix = alg.in_base_field(g) || !cl.has_realized_tag(translation.flip())?;
    match verdict {
        FixVerdict::Fixes if expect_fix => {
            for m in lines {
                let moved = match translation {
                    SideTag::Left => m.left_mul(alg, g),
                    SideTag::Right => m.right_mul(alg, g),
                };
                if !cl.is_parallel(&moved, m)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        FixVerdict::Moves { witness, .. } if !expect_fix => cl.audit_witness(g, translation, &witness),
        _ => Ok(false),
    }
}

// ---- a single class fixed linewise ----

fn thm_new1(alg: &QuaternionAlgebra, cfg: &SuiteConfig, rng: &mut SuiteRng) -> Vec<CheckRecord> {
    let h = cfg.height_bound;
    let cases: Vec<(Q, Vec<Q>)> = (0..cfg.count("thm-new1", "samples"))
        .map(|_| {
            let g = loop {
                let g = sample::nonscalar(alg, rng, h);
                if !alg.trace(&g).is_zero() {
                    break g;
                }
            };
            let lines = (0..cfg.count("thm-new1", "lines")).map(|_| sample::nonzero(rng, h)).collect();
            (g, lines)
        })
        .collect();
    vec![run_check("thm-new1/single-class-fixed-linewise", &cases, |(g, _)| fq(alg, g), |(g, samples)| {
        let p = single_class_fixer_profile(alg, g, samples)?;
        Ok(p.holds() && p.lines_checked == samples.len() && p.class == Subspace::span([&alg.unit(), g]))
    })]
}

// ---- case B: every translation stabilises every class ----

fn case_b_algebra(cfg: &SuiteConfig) -> QuarticExtension {
    match &cfg.algebra {
        AlgebraChoice::CaseB(b) => b.clone(),
        AlgebraChoice::CaseA(_) => QuarticExtension::standard(),
    }
}

fn thm_new2(cfg: &SuiteConfig, rng: &mut SuiteRng) -> Vec<CheckRecord> {
    let h = cfg.height_bound;
    let n = cfg.count("thm-new2", "samples");
    let b = case_b_algebra(cfg);
    let cl = build_parallelism(b.clone(), Default::default(), SideTag::Right).expect("the trivial tagging");
    let cases: Vec<_> = (0..n).map(|_| (sample::nonzero(rng, h), sample::line(rng, h))).collect();
    let mut out = vec![run_check(
        "thm-new2/case-b-translations-stabilise-all-classes",
        &cases,
        |(g, m)| format!("{} | {}", fq(&b, g), fs(&b, m)),
        |(g, m)| {
            let moved = m.left_mul(&b, g);
            Ok(cl.lambda_fixes_all_classes(g)?.fixes()
                && cl.is_parallel(&moved, m)?
                && is_parallel_side(&b, &moved, m, SideTag::Left)?
                && is_parallel_side(&b, &moved, m, SideTag::Right)?)
        },
    )];
    if let AlgebraChoice::CaseA(alg) = &cfg.algebra {
        // in case A a left translation fixing a right class linewise moves another right class
        let right = build_parallelism(alg.clone(), Default::default(), SideTag::Right).expect("uniform tagging");
        let cases: Vec<(Q, Q, [Q; 3])> = (0..n)
            .map(|_| {
                let x = sample::nonscalar(alg, rng, h);
                let g = Quaternion::scalar(sample::scalar(rng, h)) + x.scale(&sample::nonzero_scalar(rng, h));
                (x, g, std::array::from_fn(|_| sample::nonzero(rng, h)))
            })
            .collect();
        out.push(run_check("thm-new2/case-a-contrast", &cases, |(x, g, _)| format!("{} | {}", fq(alg, x), fq(alg, g)), |(x, g, cs)| {
            let l = Subspace::span([&alg.unit(), x]);
            let linewise = cs.iter().all(|c| translation_fixes_line(alg, g, SideTag::Left, &l.right_mul(alg, c)));
            let moves = match right.lambda_fixes_all_classes(g)? {
                FixVerdict::Moves { witness, .. } => right.audit_witness(g, SideTag::Left, &witness)?,
                FixVerdict::Fixes => false,
            };
            Ok(linewise && moves)
        }));
    }
    out
}

fn case_b(cfg: &SuiteConfig, rng: &mut SuiteRng) -> Vec<CheckRecord> {
    let h = cfg.height_bound;
    let b = case_b_algebra(cfg);
    let squares: Vec<_> = (0..cfg.count("case-b", "squares")).map(|_| sample::nonzero(rng, h)).collect();
    let mut out = vec![run_check("case-b/squares-in-base-field", &squares, |x| fq(&b, x), |x| {
        Ok(b.in_base_field(&b.mul(x, x)))
    })];
    let pairs: Vec<_> = (0..cfg.count("case-b", "pairs")).map(|_| related_pair(rng, h, &b)).collect();
    out.push(run_check("case-b/left-equals-right", &pairs, |(m, n)| format!("{} | {}", fs(&b, m), fs(&b, n)), |(m, n)| {
        Ok(is_parallel_side(&b, m, n, SideTag::Left)? == is_parallel_side(&b, m, n, SideTag::Right)?)
    }));
    let mut ds = ds_checks(&b, rng, cfg.count("case-b", "triangles"), h);
    for r in &mut ds {
        r.check = r.check.replacen("ds/", "case-b/ds-", 1);
    }
    out.extend(ds);
    out
}

// ---- automorphisms λ_g ∘ h̃ ----

fn skolem_noether<A>(alg: &A, cfg: &SuiteConfig, rng: &mut SuiteRng) -> Vec<CheckRecord>
where
    A: FourAlgebra,
    A::Scalar: SampleScalar,
{
    let h = cfg.height_bound;
    let cases: Vec<_> = (0..cfg.count("skolem-noether", "samples"))
        .map(|_| (sample::nonzero(rng, h), sample::nonzero(rng, h)))
        .collect();
    let mut out = vec![run_check(
        "skolem-noether/recovery",
        &cases,
        |(g, c)| format!("{} | {}", fq(alg, g), fq(alg, c)),
        |(g, c)| {
            let beta = alg.left_map(g).compose(&alg.inner_map(c)?);
            let sn = skolem_noether_decompose(alg, &beta)?;
            let rebuilt = alg.left_map(&sn.g).compose(&alg.inner_map(&sn.h)?);
            let scaled = match alg.kind() {
                // inner automorphisms are trivial: only h̃ = id is determined
                AlgebraKind::CaseB => true,
                _ => proportional(&sn.h, c),
            };
            Ok(sn.g == *g && rebuilt == beta && scaled)
        },
    )];
    let maps: Vec<LinearMap<A::Scalar>> = (0..cfg.count("skolem-noether", "non_multiplicative"))
        .map(|_| loop {
            let m = LinearMap::from_images(std::array::from_fn(|_| sample::element(rng, h)));
            if m.is_invertible() {
                break m;
            }
        })
        .collect();
    out.push(run_check("skolem-noether/non-multiplicative-rejected", &maps, |m| format!("{m:?}"), |m| {
        Ok(matches!(skolem_noether_decompose(alg, m), Err(Error::Membership(_))))
    }));
    out
}

/// y = c x for some c ∈ F*.
fn proportional<F: Field>(y: &Quaternion<F>, x: &Quaternion<F>) -> bool {
    let Some(n) = x.coords().iter().position(|c| !c.is_zero()) else { return false };
    let Ok(c) = y.coords()[n].div(&x.coords()[n]) else { return false };
    !c.is_zero() && *y == x.scale(&c)
}
