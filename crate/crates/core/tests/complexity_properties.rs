mod common;

use graphon::complexity::*;
use graphon::estimate::{error_budget, estimate_distances};
use graphon::experiments::simulate;
use graphon::model::GraphonSpec;
use graphon::oracle::{exact_covering_number, true_distance_matrix, QuadratureConfig, EXACT_THRESHOLD};
use graphon::SymMatrix;
use proptest::prelude::*;

fn point_cloud(max_n: usize) -> impl Strategy<Value = SymMatrix> {
    (2..=max_n, 1..=3usize).prop_flat_map(|(n, d)| {
        proptest::collection::vec(0.0..1.0f64, n * d).prop_map(move |x| {
            SymMatrix::from_upper(n, 0.0, |i, j| {
                (0..d).map(|c| (x[i * d + c] - x[j * d + c]).powi(2)).sum::<f64>().sqrt()
            })
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn greedy_within_log_factor(dist in point_cloud(12), eps in 0.01..0.8f64) {
        let g = greedy_cover(&dist, eps);
        let e = exact_cover(&dist, eps);
        prop_assert!(g.verify(&dist) && e.verify(&dist));
        let n = dist.n() as f64;
        prop_assert!(e.size <= g.size);
        prop_assert!(g.size as f64 <= (2.0 * n.ln()).max(1.0) * e.size as f64);
    }

    #[test]
    fn cover_packing_sandwich(dist in point_cloud(12), eps in 0.01..0.8f64) {
        let c = exact_cover(&dist, eps).size;
        let p = exact_packing(&dist, eps);
        let c_half = exact_cover(&dist, eps / 2.0).size;
        prop_assert!(p.verify(&dist));
        prop_assert!(c <= p.size && p.size <= c_half);
        let gp = greedy_packing(&dist, eps);
        prop_assert!(gp.verify(&dist) && gp.size <= p.size);
    }

    #[test]
    fn exact_cover_nonincreasing(dist in point_cloud(10)) {
        let sizes: Vec<usize> = (1..=20).map(|k| exact_cover(&dist, k as f64 * 0.05).size).collect();
        prop_assert!(sizes.windows(2).all(|w| w[1] <= w[0]));
    }

    #[test]
    fn correlation_integral_monotone(dist in point_cloud(20)) {
        let mut prev = 0.0;
        for k in 1..=40 {
            let c = correlation_integral(&dist, k as f64 * 0.05).unwrap();
            prop_assert!((0.0..=1.0).contains(&c) && c >= prev);
            prev = c;
        }
        prop_assert_eq!(prev, 1.0);
    }

    #[test]
    fn exact_packing_with_zero_radius(dist in point_cloud(10)) {
        // distinct points almost surely
        prop_assert_eq!(greedy_packing(&dist, 0.0).size, dist.n());
    }
}

#[test]
fn exact_oracle_refuses_large_inputs() {
    let d = SymMatrix::from_line_points(&vec![0.5; EXACT_THRESHOLD + 1]);
    assert!(exact_covering_number(&d, 0.1).is_err());
    assert!(covering_estimate_needs_positive_radius());
}

fn covering_estimate_needs_positive_radius() -> bool {
    let (_, a) = simulate(&GraphonSpec::ErdosRenyi { p: 0.5 }, 20, 1.0, 0).unwrap();
    let est = estimate_distances(&a).unwrap();
    covering_estimate(&est, 0.0, CoverMode::Auto).is_err() && covering_estimate(&est, -1.0, CoverMode::Greedy).is_err()
}

#[test]
fn auto_mode_switches_at_threshold() {
    for (n, method) in [(EXACT_THRESHOLD, CoverMethod::Exact), (EXACT_THRESHOLD + 1, CoverMethod::Greedy)] {
        let (_, a) = simulate(&GraphonSpec::ErdosRenyi { p: 0.5 }, n, 1.0, 3).unwrap();
        let est = estimate_distances(&a).unwrap();
        assert_eq!(covering_estimate(&est, 0.5, CoverMode::Auto).unwrap().method, method);
    }
}

#[test]
fn erdos_renyi_covers_with_one_ball() {
    let spec = GraphonSpec::ErdosRenyi { p: 0.5 };
    let n = 200;
    let trials = 200;
    let mut ones = 0;
    for seed in 0..trials {
        let (lat, a) = simulate(&spec, n, 1.0, seed).unwrap();
        let est = estimate_distances(&a).unwrap();
        let oracle = true_distance_matrix(&spec, &lat, &QuadratureConfig::default()).unwrap();
        let b = error_budget(n, Some(&oracle), Some(&est)).unwrap();
        let eps = b.b_sup.unwrap() + 0.05;
        ones += (covering_estimate(&est, eps, CoverMode::Greedy).unwrap().size == 1) as usize;
    }
    assert!(ones as f64 >= (1.0 - 2.0 / n as f64) * trials as f64, "{ones}/{trials}");
}

#[test]
fn covering_sandwich_on_block_model() {
    // population covering numbers of the community metric
    let spec = GraphonSpec::Sbm {
        weights: vec![0.25; 4],
        block_probs: vec![
            vec![0.9, 0.6, 0.1, 0.1],
            vec![0.6, 0.9, 0.1, 0.1],
            vec![0.1, 0.1, 0.9, 0.1],
            vec![0.1, 0.1, 0.1, 0.9],
        ],
    };
    let bm = spec.block_model().unwrap();
    let comm = SymMatrix::from_upper(4, 0.0, |a, b| bm.distance(a, b));
    let n_omega = |eps: f64| if eps <= 0.0 { usize::MAX } else { exact_cover(&comm, eps).size };
    let n = 300;
    let trials = 50;
    let mut ok = 0;
    let mut checked = 0;
    for seed in 0..trials {
        let (lat, a) = simulate(&spec, n, 1.0, seed).unwrap();
        let est = estimate_distances(&a).unwrap();
        let oracle = true_distance_matrix(&spec, &lat, &QuadratureConfig::default()).unwrap();
        let b = error_budget(n, Some(&oracle), Some(&est)).unwrap();
        let slack = b.b_sup.unwrap() + b.s_omega.unwrap();
        for eps in [slack + 0.01, slack + 0.5, slack + 1.0] {
            checked += 1;
            let hat = covering_estimate(&est, eps, CoverMode::Greedy).unwrap().size;
            let exact_hat = exact_cover(&est.distances(), eps).size;
            ok += (n_omega(eps + slack) <= exact_hat && exact_hat <= n_omega(eps - slack) && exact_hat <= hat) as usize;
        }
    }
    assert!(ok as f64 >= (1.0 - 2.0 / n as f64) * checked as f64, "{ok}/{checked}");
}

#[test]
fn dimension_identity_and_bounds() {
    let spec = GraphonSpec::GeometricGraph { d: 1, delta: 0.1 };
    for seed in 0..5 {
        let (_, a) = simulate(&spec, 300, 1.0, seed).unwrap();
        let est = estimate_distances(&a).unwrap();
        let d = estimate_dimension(&est, 2.0, 1.0).unwrap();
        assert!(d.value >= 0.0);
        assert!((d.value * -d.radius_used.ln() - (d.cov_estimate as f64).ln()).abs() < 1e-12);
        assert_eq!(d.cov_estimate, d.cover.size);
        assert!(d.sparse_rho.is_none());
    }
}

#[test]
fn sparse_graph_uses_sparse_radius() {
    let spec = GraphonSpec::GeometricGraph { d: 1, delta: 0.1 };
    let (_, a) = simulate(&spec, 400, 0.5, 1).unwrap();
    let d = estimate_dimension(&estimate_distances(&a).unwrap(), 2.0, 1.0).unwrap();
    assert_eq!(d.sparse_rho, Some(0.5));
    assert_eq!(d.radius_used, dimension_radius_sparse(400, 2.0, 0.5, 1.0).unwrap());
}

#[test]
fn tiny_graph_radius_out_of_range() {
    let (_, a) = simulate(&GraphonSpec::ErdosRenyi { p: 0.5 }, 5, 1.0, 1).unwrap();
    let est = estimate_distances(&a).unwrap();
    // (ln 5 / 5)^{1/4} * 2 > 1
    assert!(matches!(
        estimate_dimension(&est, 2.0, 2.0),
        Err(graphon::GraphonError::RadiusOutOfRange(_))
    ));
}

#[test]
fn erdos_renyi_dimension_is_zero() {
    let spec = GraphonSpec::ErdosRenyi { p: 0.5 };
    let n = 1000;
    let trials = 20;
    let zeros = (0..trials)
        .filter(|&s| {
            let (_, a) = simulate(&spec, n, 1.0, s).unwrap();
            let d = estimate_dimension(&estimate_distances(&a).unwrap(), 2.0, 1.0).unwrap();
            d.cov_estimate == 1 && d.value == 0.0
        })
        .count();
    assert_eq!(zeros, trials as usize);
}

#[test]
fn block_model_dimension_bounded_by_community_count() {
    let spec = graphon::experiments::fixture("sbm5").unwrap();
    let n = 1000;
    let eps = dimension_radius(n, 2.0, 1.0).unwrap();
    let cap = 5f64.ln() / -eps.ln();
    assert!((cap - 1.294).abs() < 1e-3);
    for seed in 0..5 {
        let (_, a) = simulate(&spec, n, 1.0, seed).unwrap();
        let d = estimate_dimension(&estimate_distances(&a).unwrap(), 2.0, 1.0).unwrap();
        assert!(d.value <= cap + 1e-12, "{}", d.value);
    }
}

#[test]
fn separated_block_model_neighbors_stay_in_community() {
    let spec = graphon::experiments::fixture("sbm2").unwrap();
    for seed in 0..10 {
        let (lat, a) = simulate(&spec, 200, 1.0, seed).unwrap();
        let est = estimate_distances(&a).unwrap();
        let same = (0..200).filter(|&i| lat.label(i) == lat.label(est.neighbor.m_hat[i])).count();
        assert!(same >= 195, "seed {seed}: {same}");
    }
}

#[test]
fn paper_grid_sweep_rows() {
    let (_, a) = simulate(&GraphonSpec::GeometricGraph { d: 1, delta: 0.1 }, 300, 1.0, 2).unwrap();
    let s = sweep_dimension_curve(&estimate_distances(&a).unwrap(), &default_grid()).unwrap();
    assert_eq!(s.rows.len(), 101);
    for r in &s.rows {
        assert!((r.dim_value + (r.cov_size as f64).ln() / r.eps.ln()).abs() < 1e-12);
    }
}
