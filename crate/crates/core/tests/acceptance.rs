//! Exit criteria. Each check prints one PASS/FAIL line; the test fails if any
//! check fails.

use poisson_core::anticanonical::{h0_antik_elliptic, h0_antik_highgenus};
use poisson_core::crosscheck::oracle_grid;
use poisson_core::curve::{h0, Curve};
use poisson_core::{
    blowup_propagate, classify, validate, BlowUpPoint, Bound, BundleSpec, Condition, CurveClass,
    DimAnswer, NumClass, RuledNum, SurfaceSpec, TriState, ValidationError, Verdict,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn report(spec: SurfaceSpec) -> Result<poisson_core::ClassificationReport, String> {
    classify(&spec).map_err(|e| format!("{spec:?}: {e}"))
}

fn hirzebruch_table() -> Check {
    let mut expected = vec![(0, 9), (2, 9), (3, 9)];
    expected.extend((4..=12).map(|n| (n, n as u64 + 6)));
    for (e, want) in expected {
        let r = report(SurfaceSpec::MinimalRuledRational { e })?;
        ensure!(r.dim == DimAnswer::exact(want), "F_{e}: got {}, want {want}", r.dim);
        ensure!(r.verdict == Verdict::Poisson, "F_{e}: verdict {}", r.verdict);
    }
    Ok(())
}

fn elliptic_table() -> Check {
    let ruled = |b| report(SurfaceSpec::ruled(1, b));
    let cases = [
        ("e=0 trivial", BundleSpec::decomposable_with(CurveClass::trivial(), 0), 3),
        ("e=0 indecomposable", BundleSpec::elliptic_unipotent(), 1),
        (
            "e=0 nontrivial torsion",
            BundleSpec::decomposable_with(CurveClass::torsion(2).unwrap(), 0),
            1,
        ),
        (
            "e=0 nontrivial (supplied)",
            BundleSpec::decomposable(0).with_residual_effective(Some(false)),
            1,
        ),
    ];
    for (name, b, want) in cases {
        let r = ruled(b)?;
        ensure!(r.dim == DimAnswer::exact(want), "{name}: got {}, want {want}", r.dim);
        ensure!(r.verdict == Verdict::Poisson, "{name}: verdict {}", r.verdict);
    }
    for e in 1..=12 {
        let r = ruled(BundleSpec::decomposable(e))?;
        ensure!(r.dim == DimAnswer::exact(e as u64 + 1), "e={e}: got {}", r.dim);
    }
    let r = ruled(BundleSpec::elliptic_odd())?;
    ensure!(r.dim == DimAnswer::exact(0), "e=-1: got {}", r.dim);
    ensure!(r.verdict == Verdict::NotPoisson, "e=-1: verdict {}", r.verdict);
    Ok(())
}

fn high_genus_shape() -> Check {
    for g in 2..=6u32 {
        let gi = i64::from(g);
        for e in -gi..=(4 * gi + 8) {
            let mut kinds = Vec::new();
            if e >= 0 {
                kinds.push(("decomposable", BundleSpec::decomposable(e)));
            }
            if e <= 2 * gi - 2 {
                kinds.push(("indecomposable", BundleSpec::indecomposable(e)));
            }
            for (kind, b) in kinds {
                let tag = format!("g={g} e={e} {kind}");
                let r = report(SurfaceSpec::ruled(g, b))?;
                let residual_degree = e - 2 * gi + 2;
                if e <= 2 * gi - 3 {
                    ensure!(
                        r.verdict == Verdict::NotPoisson && r.dim == DimAnswer::exact(0),
                        "{tag}: expected NotPoisson/0, got {} {}",
                        r.verdict,
                        r.dim
                    );
                } else if e == 2 * gi - 2 && kind == "indecomposable" {
                    ensure!(
                        r.verdict == Verdict::Poisson && r.dim == DimAnswer::exact(1),
                        "{tag}: expected Poisson/1, got {} {}",
                        r.verdict,
                        r.dim
                    );
                } else if e <= 3 * gi - 3 {
                    match &r.verdict {
                        Verdict::Conditional {
                            condition: Condition::Effective { class },
                        } => ensure!(
                            class.degree == residual_degree,
                            "{tag}: conditional on degree {}",
                            class.degree
                        ),
                        other => return Err(format!("{tag}: expected Conditional, got {other:?}")),
                    }
                    let yes = report(SurfaceSpec::ruled(g, b.with_residual_effective(Some(true))))?;
                    let clifford = (residual_degree / 2 + 1) as u64;
                    ensure!(
                        yes.verdict == Verdict::Poisson
                            && yes.dim.lower() >= 1
                            && yes.dim.upper() <= Some(clifford),
                        "{tag}: supplied effective gave {} {}",
                        yes.verdict,
                        yes.dim
                    );
                    let no = report(SurfaceSpec::ruled(g, b.with_residual_effective(Some(false))))?;
                    ensure!(
                        no.verdict == Verdict::NotPoisson && no.dim == DimAnswer::exact(0),
                        "{tag}: supplied non-effective gave {} {}",
                        no.verdict,
                        no.dim
                    );
                } else {
                    ensure!(r.verdict == Verdict::Poisson, "{tag}: verdict {}", r.verdict);
                    ensure!(r.dim.lower() >= 1, "{tag}: dim {}", r.dim);
                    if e > 4 * gi - 4 {
                        let want = (e - 3 * gi + 3) as u64;
                        ensure!(r.dim == DimAnswer::exact(want), "{tag}: got {}, want {want}", r.dim);
                    }
                }
                // The engine entry point agrees with the classifier.
                let direct = h0_antik_highgenus(g, &b).map_err(|err| format!("{tag}: {err}"))?;
                ensure!(direct == r.dim, "{tag}: engine {direct} vs classify {}", r.dim);
            }
        }
    }
    Ok(())
}

fn oracle_equivalence() -> Check {
    for (g, expected_points) in [(0u32, 20usize), (1, 22)] {
        let summary = oracle_grid(g, 0..=20).map_err(|e| e.to_string())?;
        if let Some(bad) = summary.first_mismatch() {
            return Err(format!("g={g}: first mismatch {bad:?}"));
        }
        ensure!(
            summary.passed() == expected_points,
            "g={g}: {} points compared, expected {expected_points}",
            summary.passed()
        );
    }
    Ok(())
}

fn lattice_properties() -> Check {
    for g in 0..=5u32 {
        for e in -i64::from(g)..=8 {
            let s = RuledNum::new(g, e);
            let k = s.anticanonical_class();
            ensure!(s.intersect(k, k) == 8 * (1 - i64::from(g)), "g={g} e={e}: K^2");
            ensure!(s.intersect(k, NumClass::FIBRE) == 2, "g={g} e={e}: K.f");
            for a1 in -6..=6 {
                for b1 in -6..=6 {
                    let x = NumClass::new(a1, b1);
                    if s.is_ample(x) {
                        ensure!(
                            s.intersect(x, x) > 0 && s.intersect(x, NumClass::FIBRE) > 0,
                            "g={g} e={e}: ample {x} not positive"
                        );
                    }
                    for a2 in -6..=6 {
                        let ys = (-6..=6).map(|b2| NumClass::new(a2, b2));
                        for y in ys {
                            let xy = s.intersect(x, y);
                            ensure!(xy == s.intersect(y, x), "g={g} e={e}: asymmetric {x} {y}");
                            let expanded = a1 * s.intersect(NumClass::SECTION, y)
                                + b1 * s.intersect(NumClass::FIBRE, y);
                            ensure!(xy == expanded, "g={g} e={e}: not linear at {x} {y}");
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn genus_two_obstruction() -> Check {
    let s = RuledNum::new(2, -2);
    let k = s.anticanonical_class();
    ensure!(k == NumClass::new(2, -4), "-K = {k}");
    ensure!(
        s.numerical_noneffective(k) == TriState::No,
        "-K not refuted"
    );
    let witness = s
        .obstructing_ample_class(k)
        .ok_or("no obstructing ample class")?;
    ensure!(s.is_ample(witness), "witness {witness} not ample");
    ensure!(s.intersect(k, witness) == 0, "-K . {witness} != 0");
    let r = report(SurfaceSpec::ruled(2, BundleSpec::indecomposable(-2)))?;
    ensure!(
        r.verdict == Verdict::NotPoisson && r.dim == DimAnswer::exact(0),
        "classify gave {} {}",
        r.verdict,
        r.dim
    );
    Ok(())
}

/// All values the dimension can take once every unknown flag is resolved.
fn resolutions(base: u64, flags: &[TriState]) -> Vec<u64> {
    let unknown: Vec<usize> = (0..flags.len()).filter(|&i| flags[i] == TriState::Unknown).collect();
    (0..1u32 << unknown.len())
        .map(|mask| {
            let mut n = base;
            for (i, f) in flags.iter().enumerate() {
                let kept = match f {
                    TriState::Yes => true,
                    TriState::No => false,
                    TriState::Unknown => {
                        let bit = unknown.iter().position(|&u| u == i).unwrap();
                        mask >> bit & 1 == 1
                    }
                };
                if !kept {
                    n = n.saturating_sub(1);
                }
            }
            n
        })
        .collect()
}

fn blowup_algebra() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_b10b);
    for trial in 0..1000 {
        let base: u64 = rng.gen_range(0..=12);
        let len = rng.gen_range(0..=8);
        let flags: Vec<TriState> = (0..len)
            .map(|_| match rng.gen_range(0..3) {
                0 => TriState::Yes,
                1 => TriState::No,
                _ => TriState::Unknown,
            })
            .collect();
        let points: Vec<BlowUpPoint> = flags.iter().copied().map(BlowUpPoint::new).collect();
        let out = blowup_propagate(&DimAnswer::exact(base), &points);
        let (lo, hi) = (out.lower(), out.upper().unwrap());
        let tag = format!("trial {trial}: base {base}, flags {flags:?} -> {out}");

        ensure!(hi <= base, "{tag}: exceeds base");
        ensure!(lo + len as u64 >= base, "{tag}: dropped more than {len}");

        let values = resolutions(base, &flags);
        let (min, max) = (*values.iter().min().unwrap(), *values.iter().max().unwrap());
        ensure!((lo, hi) == (min, max), "{tag}: hull of resolutions is [{min},{max}]");

        let unknown = flags.iter().filter(|&&f| f == TriState::Unknown).count() as u64;
        ensure!(hi - lo <= unknown, "{tag}: width exceeds unknown count {unknown}");
        if base >= len as u64 {
            ensure!(hi - lo == unknown, "{tag}: width != unknown count {unknown}");
        }

        // Step by step: a base point keeps the answer, a non-base point drops it.
        let mut dim = DimAnswer::exact(base);
        for p in &points {
            let next = blowup_propagate(&dim, std::slice::from_ref(p));
            match p.base_point_of_antik {
                TriState::Yes => ensure!(next == dim, "{tag}: base point changed {dim} -> {next}"),
                TriState::No if dim.lower() >= 1 => ensure!(
                    next.upper().unwrap() + 1 == dim.upper().unwrap(),
                    "{tag}: non-base point kept {dim} -> {next}"
                ),
                _ => {}
            }
            dim = next;
        }
        ensure!(dim == out, "{tag}: stepwise {dim} differs");
    }
    Ok(())
}

#[derive(Debug, PartialEq)]
enum Expect {
    Ok,
    Inadmissible(Bound),
    Inconsistent,
}

fn validation_scan() -> Check {
    let mut fired = [0usize; 3];
    for g in 0..=6u32 {
        let gi = i64::from(g);
        for e in -8..=12i64 {
            for decomposable in [true, false] {
                let b = if decomposable {
                    BundleSpec::decomposable(e)
                } else {
                    BundleSpec::indecomposable(e)
                };
                let expect = if decomposable {
                    if e < 0 {
                        Expect::Inadmissible(Bound::DecomposableNonNegative)
                    } else {
                        Expect::Ok
                    }
                } else if e < -gi {
                    Expect::Inadmissible(Bound::IndecomposableLower)
                } else if e <= 2 * gi - 2 {
                    Expect::Ok
                } else if e <= 3 * gi - 3 {
                    Expect::Inconsistent
                } else {
                    Expect::Inadmissible(Bound::IndecomposableUpper)
                };
                let got = match validate(&SurfaceSpec::ruled(g, b)) {
                    Ok(_) => Expect::Ok,
                    Err(ValidationError::InadmissibleInvariant { bound, .. }) => {
                        Expect::Inadmissible(bound)
                    }
                    Err(ValidationError::InconsistentBundleKind { .. }) => Expect::Inconsistent,
                    Err(other) => return Err(format!("g={g} e={e}: unexpected {other}")),
                };
                ensure!(got == expect, "g={g} e={e} decomposable={decomposable}: {got:?} vs {expect:?}");
                match got {
                    Expect::Inadmissible(Bound::DecomposableNonNegative) => fired[0] += 1,
                    Expect::Inadmissible(_) => fired[1] += 1,
                    Expect::Inconsistent => fired[2] += 1,
                    Expect::Ok => {}
                }
            }
        }
    }
    ensure!(fired.iter().all(|&n| n > 0), "some error never fired: {fired:?}");
    // The boundaries themselves.
    let ok = |g, b| validate(&SurfaceSpec::ruled(g, b)).is_ok();
    for g in 2..=6u32 {
        let gi = i64::from(g);
        ensure!(ok(g, BundleSpec::indecomposable(-gi)), "g={g}: e=-g rejected");
        ensure!(!ok(g, BundleSpec::indecomposable(-gi - 1)), "g={g}: e=-g-1 accepted");
        ensure!(ok(g, BundleSpec::indecomposable(2 * gi - 2)), "g={g}: e=2g-2 rejected");
        ensure!(!ok(g, BundleSpec::indecomposable(2 * gi - 1)), "g={g}: e=2g-1 accepted");
        ensure!(ok(g, BundleSpec::decomposable(0)), "g={g}: split e=0 rejected");
        ensure!(!ok(g, BundleSpec::decomposable(-1)), "g={g}: split e=-1 accepted");
    }
    Ok(())
}

type Criterion = (&'static str, fn() -> Check);

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        ("1 Hirzebruch table", hirzebruch_table),
        ("2 elliptic-base table", elliptic_table),
        ("3 genus >= 2 shape", high_genus_shape),
        ("4 oracle equivalence", oracle_equivalence),
        ("5 lattice properties", lattice_properties),
        ("6 g=2, e=-2 obstruction", genus_two_obstruction),
        ("7 blow-up algebra", blowup_algebra),
        ("8 validation boundaries", validation_scan),
    ];
    // Start on a fresh line after the harness prefix.
    println!();
    let mut failures = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(()) => println!("PASS  {name}"),
            Err(msg) => {
                println!("FAIL  {name}: {msg}");
                failures.push(name);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}

#[test]
fn elliptic_engine_matches_classifier() {
    for e in 1..=20 {
        let b = BundleSpec::decomposable(e);
        let direct = h0_antik_elliptic(&b).unwrap();
        assert_eq!(classify(&SurfaceSpec::ruled(1, b)).unwrap().dim, direct);
    }
}

#[test]
fn plane_cubic_count_by_enumeration() {
    let cubics = (0..=3)
        .flat_map(|i| (0..=3 - i).map(move |j| (i, j, 3 - i - j)))
        .count() as u64;
    assert_eq!(classify(&SurfaceSpec::ProjectivePlane).unwrap().dim, DimAnswer::exact(cubics));
}

#[test]
fn clifford_bound_on_resolved_conditionals() {
    // Once effective, a degree-d class on a genus-g curve has at most d/2 + 1 sections.
    for g in 2..=6u32 {
        for d in 0..g as i64 {
            let x = CurveClass::of_degree(d).with_effective(Some(true));
            let a = h0(&Curve::new(g), &x);
            assert!(a.lower() >= 1 && a.upper() == Some((d / 2 + 1) as u64), "g={g} d={d}: {a}");
        }
    }
}
