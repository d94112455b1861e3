use dimspec::eigen::{eig_sym, principal_pair};
use dimspec::io::{parse_graph, serialize_graph};
use dimspec::{join, matrix, Graph, MatrixKind};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 1..=n {
                for v in u + 1..=n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn traces_and_power_sums(g in arb_graph(10)) {
        let e = g.size() as f64;
        let a = eig_sym(&matrix(&g, MatrixKind::Adjacency)).unwrap().values;
        prop_assert!(a.iter().sum::<f64>().abs() < 1e-9);
        prop_assert!((a.iter().map(|x| x * x).sum::<f64>() - 2.0 * e).abs() < 1e-8);
        for kind in [MatrixKind::Laplacian, MatrixKind::SignlessLaplacian] {
            let v = eig_sym(&matrix(&g, kind)).unwrap().values;
            prop_assert!((v.iter().sum::<f64>() - 2.0 * e).abs() < 1e-8);
            prop_assert!(v.iter().all(|&x| x > -1e-9));
        }
        let l = eig_sym(&matrix(&g, MatrixKind::Laplacian)).unwrap().values;
        prop_assert!(l.iter().cloned().fold(f64::INFINITY, f64::min).abs() < 1e-9);
        prop_assert!(l[0] <= g.order() as f64 + 1e-9);
    }

    #[test]
    fn decomposition_is_accurate(g in arb_graph(10)) {
        for kind in MatrixKind::ALL {
            let m = matrix(&g, kind);
            let d = eig_sym(&m).unwrap();
            prop_assert!(d.max_residual(&m) < 1e-9);
            prop_assert!(d.orthogonality_error() < 1e-9);
            prop_assert!(d.values.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn principal_pair_dominates(g in arb_graph(9)) {
        prop_assume!(g.is_connected());
        let a = matrix(&g, MatrixKind::Adjacency);
        let p = principal_pair(&a, MatrixKind::Adjacency).unwrap();
        let top = eig_sym(&a).unwrap().values[0];
        prop_assert!((p.radius - top).abs() < 1e-9);
        if g.order() > 1 {
            prop_assert!(p.vector.iter().all(|&x| x > 0.0));
        }
        let av = a.mul_vec(&p.vector);
        for (x, y) in av.iter().zip(&p.vector) {
            prop_assert!((x - p.radius * y).abs() < 1e-8);
        }
    }

    #[test]
    fn text_round_trip(g in arb_graph(12)) {
        let text = serialize_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(serialize_graph(&back), text);
    }

    #[test]
    fn join_degrees(g1 in arb_graph(5), g2 in arb_graph(5)) {
        let j = join(&g1, &g2);
        let (n1, n2) = (g1.order(), g2.order());
        prop_assert_eq!(j.order(), n1 + n2);
        prop_assert_eq!(j.size(), g1.size() + g2.size() + n1 * n2);
        for v in 1..=n1 {
            prop_assert_eq!(j.degree(v), g1.degree(v) + n2);
        }
        for v in 1..=n2 {
            prop_assert_eq!(j.degree(n1 + v), g2.degree(v) + n1);
        }
    }
}
