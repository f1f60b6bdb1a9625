use poisson_core::{classify, BundleSpec, DimAnswer, SurfaceSpec, TriState, ValidationError, Verdict};

fn admissible(g: u32) -> impl Iterator<Item = (i64, BundleSpec)> {
    let gi = i64::from(g);
    (-gi - 2..=4 * gi + 6).flat_map(move |e| {
        let mut out = Vec::new();
        if e >= 0 {
            out.push((e, BundleSpec::decomposable(e)));
        }
        if g > 0 && (-gi..=2 * gi - 2).contains(&e) {
            out.push((e, BundleSpec::indecomposable(e)));
        }
        out
    })
}

// Every admissible invariant classifies, and the verdict matches the dimension.
#[test]
fn classify_is_total_on_admissible_invariants() {
    for g in 0..=6 {
        for (e, bundle) in admissible(g) {
            let spec = SurfaceSpec::ruled(g, bundle);
            let r = classify(&spec).unwrap_or_else(|err| panic!("g={g} e={e}: {err}"));
            match (&r.verdict, &r.dim) {
                (Verdict::Poisson, d) => assert!(d.lower() >= 1),
                (Verdict::NotPoisson, d) => assert!(d.is_zero()),
                (Verdict::Conditional { .. }, DimAnswer::ConditionalOn { .. }) => {}
                (Verdict::Conditional { .. }, d) => assert_eq!(d.lower(), 0),
            }
            assert_eq!(r.rule_chain.last().map(|s| &s.outcome), Some(&r.dim));
        }
    }
}

// Below e = 2g - 2 nothing over a curve of genus >= 2 is Poisson.
#[test]
fn high_genus_gate() {
    for g in 2..=6u32 {
        for (e, bundle) in admissible(g) {
            if e < 2 * i64::from(g) - 2 {
                let r = classify(&SurfaceSpec::ruled(g, bundle)).unwrap();
                assert_eq!(r.verdict, Verdict::NotPoisson, "g={g} e={e}");
            }
        }
    }
}

// Beyond the indecomposable window the classifier refuses rather than guesses.
#[test]
fn window_rejected() {
    for g in 2..=6u32 {
        let gi = i64::from(g);
        for e in 2 * gi - 1..=3 * gi - 3 {
            let err = classify(&SurfaceSpec::ruled(g, BundleSpec::indecomposable(e))).unwrap_err();
            assert!(matches!(err, ValidationError::InconsistentBundleKind { .. }), "g={g} e={e}");
        }
    }
}

// Adding blown-up points never raises the upper bound.
#[test]
fn blow_ups_are_monotone() {
    let bases = [
        SurfaceSpec::ProjectivePlane,
        SurfaceSpec::MinimalRuledRational { e: 4 },
        SurfaceSpec::ruled(1, BundleSpec::decomposable(3)),
        SurfaceSpec::ruled(3, BundleSpec::decomposable(9)),
    ];
    let flags = [TriState::Yes, TriState::No, TriState::Unknown];
    for base in &bases {
        let mut points = Vec::new();
        let mut prev = classify(base).unwrap().dim;
        for i in 0..6 {
            points.push(flags[i % 3]);
            let dim = classify(&SurfaceSpec::blow_up(base.clone(), &points)).unwrap().dim;
            assert!(dim.upper() <= prev.upper() && dim.lower() <= prev.lower());
            prev = dim;
        }
    }
}
