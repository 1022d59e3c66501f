//! Worked examples with independently derived or published values.

use num_bigint::BigInt;
use schurkit_core::catalan::{catalan, catalan_hankel, q_catalan, woo_check};
use schurkit_core::lattice::{
    entry_as_one_flagged, h_flagged_via_lgv, nc_path_systems, one_flagged_via_paths, partition_function,
    GridPoint, Variant, WeightedGrid,
};
use schurkit_core::perms::Permutation;
use schurkit_core::schubert::{divided_difference, schubert_poly, wachs_check, DEFAULT_MAX_N};
use schurkit_core::search::{max_search, SearchConfig};
use schurkit_core::shapes::{Flag, Partition};
use schurkit_core::tableaux::{
    complete_homogeneous, enumerate_tableaux, flagged_schur, h_flagged_schur, jacobi_trudi,
    to_plane_partition, weight_monomial, FlaggedTableau,
};
use schurkit_core::{LaurentPoly, PolyMatrix};

fn shape(s: &str) -> Partition {
    s.parse().unwrap()
}

fn flag(s: &str) -> Flag {
    s.parse().unwrap()
}

fn poly(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

const S21: &str = "x1^2*x2 + x1^2*x3 + x1*x2*x3 + x1*x2^2 + x2^2*x3";

#[test]
fn one_flagged_two_one() {
    let tableaux = enumerate_tableaux(&shape("(2,1)"), &flag("(2,3)")).unwrap();
    let rows: Vec<String> = tableaux.iter().map(|t| t.to_string()).collect();
    let mut rows_sorted = rows.clone();
    rows_sorted.sort();
    assert_eq!(rows_sorted, ["1 1/2", "1 1/3", "1 2/2", "1 2/3", "2 2/3"]);
    assert_eq!(flagged_schur(&shape("(2,1)"), &flag("(2,3)")).unwrap(), poly(S21));
    assert_eq!(h_flagged_schur(&shape("(2,1)"), 1), poly(S21));
    assert_eq!(jacobi_trudi(&shape("(2,1)"), &flag("(2,3)")).unwrap(), poly(S21));
    assert_eq!(one_flagged_via_paths(&shape("(2,1)")), poly(S21));
}

#[test]
fn empty_flagged_sets() {
    assert!(enumerate_tableaux(&shape("(1,1)"), &flag("(1,1)"))
        .unwrap()
        .is_empty());
    assert!(jacobi_trudi(&shape("(1,1)"), &flag("(1,1)")).unwrap().is_zero());
    assert!(complete_homogeneous(-2, 3).is_zero());
}

#[test]
fn single_row_is_complete_homogeneous() {
    for k in 0..=4 {
        for n in 1..=4 {
            let lambda = Partition::new(if k == 0 { vec![] } else { vec![k] }).unwrap();
            let b = Flag::new(if k == 0 { vec![] } else { vec![n] }).unwrap();
            assert_eq!(
                flagged_schur(&lambda, &b).unwrap(),
                complete_homogeneous(k as i64, n)
            );
        }
    }
}

#[test]
fn tableau_weight_and_plane_partitions() {
    let t: FlaggedTableau = "1 1 1 2 2/2 2 3/3 3/5 5".parse().unwrap();
    assert_eq!(weight_monomial(&t), poly("x1^3*x2^4*x3^3*x5^2"));
    let t: FlaggedTableau = "1 1/2".parse().unwrap();
    assert_eq!(to_plane_partition(&t, 1).unwrap(), vec![vec![1, 1], vec![1]]);
    let t: FlaggedTableau = "2 2/3".parse().unwrap();
    assert_eq!(to_plane_partition(&t, 1).unwrap(), vec![vec![0, 0], vec![0]]);
}

#[test]
fn two_flagged_count() {
    // nested pairs of subdiagrams of (2,1)
    let subs = shape("(2,1)").subdiagrams();
    let pairs = subs
        .iter()
        .flat_map(|a| subs.iter().filter(move |b| b.contains(a)))
        .count();
    assert_eq!(pairs, 14);
    assert_eq!(
        h_flagged_schur(&shape("(2,1)"), 2).eval_at_ones(),
        BigInt::from(14)
    );
}

#[test]
fn diagram_operations() {
    assert_eq!(shape("(2,1)").subdiagrams().len(), 5);
    assert_eq!(shape("(2,1)").extend(1, 0).unwrap(), shape("(2,2,1)"));
    assert_eq!(shape("(2,1)").extend(0, 1).unwrap(), shape("(3,2)"));
    assert_eq!(
        shape("(3,3,1)").staircase_extend(2, 3),
        shape("(8,7,6,6,4,3,2,1)")
    );
    assert_eq!(shape("(2,1)").staircase_extend(1, 0), shape("(3,2,1)"));
    assert_eq!(Partition::staircase(3), shape("(2,1)"));
    assert_eq!(
        Partition::staircase(3).staircase_extend(1, 1),
        Partition::staircase(5)
    );
}

#[test]
fn unit_square_paths() {
    let g = WeightedGrid::new(shape("(1)"));
    let z = partition_function(&g, GridPoint::new(0, -1), GridPoint::new(1, 0)).unwrap();
    assert_eq!(z, poly("x1^-1 + x2^-1"));
    let starts = [GridPoint::new(0, -1), GridPoint::new(1, -1)];
    let ends = [GridPoint::new(0, 0), GridPoint::new(1, 0)];
    assert_eq!(nc_path_systems(&g, &starts, &ends).unwrap().len(), 1);
    assert_eq!(one_flagged_via_paths(&shape("(1)")), poly("x1 + x2"));
}

#[test]
fn two_flagged_determinants() {
    let lambda = shape("(2,1)");
    let expected = h_flagged_schur(&lambda, 2);
    assert_eq!(h_flagged_via_lgv(&lambda, 2, Variant::Plain).unwrap(), expected);
    let stair = h_flagged_via_lgv(&lambda, 2, Variant::Staircase).unwrap();
    assert_eq!(stair, expected);
    assert!(stair.max_var() <= 4);
    let e = entry_as_one_flagged(&lambda, 2, 1, 1, Variant::Plain).unwrap();
    assert_eq!((e.diagram, e.first_var), (shape("(2,1)"), 2));
    assert_eq!(LaurentPoly::monomial(e.denominator), poly("x2^2*x3^2*x4"));
}

#[test]
fn permutation_statistics() {
    assert_eq!(perm("(1342)").length(), 2);
    assert_eq!(perm("(42135)").lehmer_code(), vec![3, 1, 0, 0, 0]);
    let (lambda, b) = perm("(132)").vexillary_shape_and_flag().unwrap();
    assert_eq!((lambda, b), (shape("(1)"), flag("(2)")));
    assert_eq!(perm("(42135)").extend_dominant(1, 0).unwrap(), perm("(542136)"));
    assert_eq!(perm("(42135)").extend_dominant(0, 1).unwrap(), perm("(532146)"));
    let ext = Permutation::longest(3).extend_dominant(1, 1).unwrap();
    assert_eq!(Partition::from_unsorted(ext.lehmer_code()), shape("(4,3,2,1)"));
    assert!(perm("(21543)").is_richardson());
    assert!(!perm("(1342)").is_richardson());
}

#[test]
fn schubert_examples() {
    let step = divided_difference(&poly("x1^2*x2"), 2).unwrap();
    assert_eq!(divided_difference(&step, 1).unwrap(), poly("x1 + x2"));
    assert_eq!(schubert_poly(&perm("(132)")), poly("x1 + x2"));
    assert_eq!(schubert_poly(&perm("(1432)")), poly(S21));
    assert!(wachs_check(&perm("(1432)")).unwrap());
    for w in Permutation::all(5).into_iter().filter(Permutation::is_vexillary) {
        assert!(wachs_check(&w).unwrap(), "{w}");
    }
    let w = Permutation::longest(3).shift(2);
    assert_eq!(w, perm("(12543)"));
    assert_eq!(schubert_poly(&w).eval_at_ones(), BigInt::from(14));
}

#[test]
fn catalan_examples() {
    assert_eq!(catalan(3), BigInt::from(5));
    assert_eq!(catalan(4), BigInt::from(14));
    assert_eq!(q_catalan(2), poly("1 + x1"));
    assert_eq!(q_catalan(3), poly("1 + 2*x1 + x1^2 + x1^3"));
    assert_eq!(
        schubert_poly(&perm("(132)")).principal_specialization(),
        poly("1 + x1")
    );
    assert_eq!(
        schubert_poly(&perm("(1432)")).principal_specialization(),
        poly("x1 + 2*x1^2 + x1^3 + x1^4")
    );
    for n in 1..=6 {
        assert!(woo_check(n, DEFAULT_MAX_N).unwrap(), "n = {n}");
    }
    let m = PolyMatrix::from_fn(2, 2, |i, j| LaurentPoly::constant([5, 14, 42][i + j]));
    assert_eq!(m.determinant().unwrap(), LaurentPoly::constant(14));
    assert_eq!(catalan_hankel(3, 2), BigInt::from(14));
}

#[test]
fn maxima() {
    let cfg = SearchConfig::default();
    let r = max_search(4, &cfg).unwrap();
    assert_eq!((r.max_value, r.argmax), (5, vec![perm("(1432)")]));
    let r = max_search(7, &cfg).unwrap();
    assert_eq!((r.max_value, r.argmax.clone()), (660, vec![perm("(1327654)")]));
    assert!(r.all_argmax_richardson);
}
