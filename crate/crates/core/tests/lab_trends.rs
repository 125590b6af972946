use pursuit_core::graph::PFamily;
use pursuit_core::lab::{estimate_mu, sweep, wilson_interval, EstimateOptions, PSpec, Target};
use pursuit_core::logic::{extension_axiom, Builtin};

#[test]
fn extension_axiom_is_likely_at_sixty_vertices() {
    let f = extension_axiom(1, 2).unwrap();
    let r = estimate_mu("ea_1_2", &f, 60, &PSpec::Const(0.5), &EstimateOptions::new(200, 1)).unwrap();
    // Union bound on failure: n^2 (3/4)^(n-2) is about 2e-4.
    assert!(r.estimate >= 0.99, "{r:?}");
}

#[test]
fn extension_axiom_trend_rises_with_n() {
    let target = Target::formula("ea_1_2", extension_axiom(1, 2).unwrap()).unwrap();
    let rows = sweep(&target, &[10, 20, 40, 60], &PSpec::Const(0.5), &EstimateOptions::new(200, 1));
    let estimates: Vec<f64> = rows.iter().map(|r| r.result.as_ref().unwrap().estimate).collect();
    assert!(estimates.windows(2).all(|w| w[0] <= w[1]), "{estimates:?}");
    assert!(estimates[3] >= 0.99, "{estimates:?}");
}

#[test]
fn very_sparse_graphs_are_empty_at_the_exact_rate() {
    let fam = PFamily::new(1.0, 2.5, 0.0).unwrap();
    let target = Target::formula("empty_graph", Builtin::EmptyGraph.formula()).unwrap();
    let rows = sweep(&target, &[50, 100], &PSpec::Family(fam), &EstimateOptions::new(2000, 1));
    for row in rows {
        let r = row.result.unwrap();
        let pairs = (r.n * (r.n - 1) / 2) as i32;
        let exact = (1.0 - fam.eval(r.n)).powi(pairs);
        let (lo, hi) = wilson_interval(r.successes, r.samples, 0.999);
        assert!(lo <= exact && exact <= hi, "n={} exact {exact} not in [{lo}, {hi}]", r.n);
        // Markov bound on the edge count.
        assert!(exact >= 1.0 - pairs as f64 * fam.eval(r.n));
    }
}
