use proptest::prelude::*;

use tube_cluster::mutation::{fz_mutate_matrix, is_sign_skew_symmetric};
use tube_cluster::polygon::{crossing_points, delta, delta_inv};
use tube_cluster::rep::{build_rep, hom_dim_oracle};
use tube_cluster::tube::{ext_dim_cluster, hom_dim_cluster, hom_dim_tube};
use tube_cluster::{IntMatrix, TubeObject, TubeRank};

fn object(max_rank: u32, max_len: u32) -> impl Strategy<Value = TubeObject> {
    (2..=max_rank).prop_flat_map(move |n| {
        (1..=n, 1..=max_len).prop_map(move |(a, b)| TubeObject::new(TubeRank::new(n).unwrap(), a, b).unwrap())
    })
}

fn pair_same_rank(max_rank: u32, max_len: u32) -> impl Strategy<Value = (TubeObject, TubeObject)> {
    (2..=max_rank).prop_flat_map(move |n| {
        let r = TubeRank::new(n).unwrap();
        ((1..=n, 1..=max_len), (1..=n, 1..=max_len)).prop_map(move |((a, b), (c, d))| {
            (TubeObject::new(r, a, b).unwrap(), TubeObject::new(r, c, d).unwrap())
        })
    })
}

fn rigid_pair(max_rank: u32) -> impl Strategy<Value = (TubeObject, TubeObject)> {
    (2..=max_rank).prop_flat_map(|n| {
        let r = TubeRank::new(n).unwrap();
        ((1..=n, 1..n), (1..=n, 1..n)).prop_map(move |((a, b), (c, d))| {
            (TubeObject::new(r, a, b).unwrap(), TubeObject::new(r, c, d).unwrap())
        })
    })
}

fn square_matrix() -> impl Strategy<Value = (IntMatrix, usize)> {
    (1usize..6).prop_flat_map(|m| {
        (prop::collection::vec(-3i64..=3, m * m), 0..m).prop_map(move |(data, k)| {
            let rows: Vec<Vec<i64>> = data.chunks(m).map(<[i64]>::to_vec).collect();
            (IntMatrix::from_rows(&rows).unwrap(), k)
        })
    })
}

proptest! {
    #[test]
    fn tau_is_invertible(x in object(9, 30)) {
        prop_assert_eq!(x.tau().tau_inv(), x);
        prop_assert_eq!(x.tau_inv().tau(), x);
        prop_assert_eq!(x.tau().b(), x.b());
    }

    #[test]
    fn formula_matches_oracle((x, y) in pair_same_rank(9, 20)) {
        prop_assert_eq!(hom_dim_tube(&x, &y).unwrap(), hom_dim_oracle(&x, &y).unwrap());
    }

    #[test]
    fn ext_is_symmetric((x, y) in pair_same_rank(9, 30)) {
        prop_assert_eq!(ext_dim_cluster(&x, &y).unwrap(), ext_dim_cluster(&y, &x).unwrap());
    }

    #[test]
    fn cluster_hom_dominates_tube_hom((x, y) in pair_same_rank(9, 30)) {
        prop_assert!(hom_dim_cluster(&x, &y).unwrap() >= hom_dim_tube(&x, &y).unwrap());
    }

    #[test]
    fn rep_dimension_is_quasi_length(x in object(9, 30)) {
        prop_assert_eq!(build_rep(&x).total_dim(), x.b() as usize);
    }

    #[test]
    fn delta_round_trip((x, y) in rigid_pair(12)) {
        prop_assert_eq!(delta_inv(&delta(&x).unwrap()).unwrap(), x);
        let c = crossing_points(&delta(&x).unwrap(), &delta(&y).unwrap());
        prop_assert_eq!(c, 2 * ext_dim_cluster(&x, &y).unwrap());
    }

    #[test]
    fn mutation_is_an_involution((b, k) in square_matrix()) {
        let once = fz_mutate_matrix(&b, k).unwrap();
        prop_assert_eq!(fz_mutate_matrix(&once, k).unwrap(), b);
    }

    #[test]
    fn mutation_preserves_sign_skew_symmetry_of_skew_matrices((b, k) in square_matrix()) {
        // antisymmetrise to get a skew-symmetric input
        let m = b.rows();
        let rows: Vec<Vec<i64>> = (0..m).map(|i| (0..m).map(|j| b.get(i, j) - b.get(j, i)).collect()).collect();
        let skew = IntMatrix::from_rows(&rows).unwrap();
        prop_assert!(is_sign_skew_symmetric(&skew));
        prop_assert!(is_sign_skew_symmetric(&fz_mutate_matrix(&skew, k).unwrap()));
    }
}
