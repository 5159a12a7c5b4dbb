mod common;

use grassmann_hodge::bwb::hodge_table;
use grassmann_hodge::enumeration::{Enumerator, KnijtQuery};
use grassmann_hodge::partition::{Cell, Partition, Rectangle};
use grassmann_hodge::tcore::{boundary_partition, coarsen, is_t_core, skew_inverse, t_interior};
use proptest::prelude::*;

fn partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

/// A t-core built from a random (t-1)-bounded partition.
fn core_with_t() -> impl Strategy<Value = (Partition, usize)> {
    (2usize..=8)
        .prop_flat_map(|t| (partition(8, t - 1), Just(t)))
        .prop_map(|(mu, t)| (skew_inverse(&mu, t).unwrap(), t))
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(lam in partition(10, 10)) {
        prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
        prop_assert_eq!(lam.conjugate().size(), lam.size());
    }

    #[test]
    fn hooks_match_grid_count(lam in partition(9, 9)) {
        prop_assert_eq!(lam.hook_lengths(), common::grid_hooks(lam.parts()));
    }

    #[test]
    fn hooks_decrease_right_and_down(lam in partition(9, 9)) {
        let h = lam.hook_lengths();
        for (r, row) in h.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                if c + 1 < row.len() { prop_assert!(row[c + 1] < x); }
                if r + 1 < h.len() && c < h[r + 1].len() { prop_assert!(h[r + 1][c] < x); }
            }
        }
    }

    #[test]
    fn hooks_are_conjugation_symmetric(lam in partition(9, 9)) {
        let conj = lam.conjugate();
        for cell in lam.cells() {
            prop_assert_eq!(
                lam.hook_length(cell).unwrap(),
                conj.hook_length(Cell::new(cell.col, cell.row)).unwrap()
            );
        }
    }

    #[test]
    fn corner_hook_is_semiperimeter_minus_one(lam in partition(9, 9)) {
        prop_assume!(!lam.is_empty());
        prop_assert_eq!(lam.hook_length(Cell::new(1, 1)).unwrap(), lam.semiperimeter() - 1);
    }

    #[test]
    fn complement_sizes_add_up(lam in partition(6, 7)) {
        let rect = Rectangle::new(7, 6).unwrap();
        let comp = lam.complement(&rect).unwrap();
        prop_assert_eq!(lam.size() + comp.size(), rect.area());
        prop_assert_eq!(comp.complement(&rect).unwrap(), lam);
    }

    #[test]
    fn core_property_matches_naive(lam in partition(8, 8), t in 0usize..12) {
        prop_assert_eq!(is_t_core(&lam, t), common::is_core(lam.parts(), t));
    }

    #[test]
    fn cores_are_cores_for_divisors((lam, t) in core_with_t(), d in 1usize..=4) {
        prop_assert!(is_t_core(&lam, t * d));
    }

    #[test]
    fn interiors_nest((lam, t) in core_with_t()) {
        if is_t_core(&lam, t - 1) {
            let outer = t_interior(&lam, t - 1).unwrap().interior;
            let inner = t_interior(&lam, t).unwrap().interior;
            prop_assert!(outer.contains(&inner));
        }
    }

    #[test]
    fn interior_commutes_with_conjugation((lam, t) in core_with_t()) {
        let a = t_interior(&lam, t).unwrap();
        let b = t_interior(&lam.conjugate(), t).unwrap();
        prop_assert_eq!(a.interior.conjugate(), b.interior);
        prop_assert_eq!(a.boundary_size, b.boundary_size);
        prop_assert_eq!(a.interior.size(), common::interior_size(lam.parts(), t));
    }

    #[test]
    fn block_hooks_are_contiguous(lam in partition(9, 9)) {
        prop_assume!(!lam.is_empty());
        let c = coarsen(&lam).unwrap();
        prop_assert_eq!(c.to_partition(), lam.clone());
        let hooks = lam.hook_lengths();
        for p in 1..=c.len() {
            for q in 1..=c.len() + 1 - p {
                let (rows, cols) = c.block_span(p, q);
                let mut values: Vec<usize> = rows
                    .flat_map(|r| cols.clone().map(move |col| (r, col)))
                    .map(|(r, col)| hooks[r - 1][col - 1])
                    .collect();
                values.sort_unstable();
                values.dedup();
                let (lo, hi) = (values[0], *values.last().unwrap());
                prop_assert_eq!(values.len(), hi - lo + 1);
            }
        }
    }

    #[test]
    fn skew_then_boundary_is_identity(mu in partition(10, 7), extra in 0usize..3) {
        let t = mu.largest() + 1 + extra;
        let lam = skew_inverse(&mu, t).unwrap();
        prop_assert!(common::is_core(lam.parts(), t));
        prop_assert_eq!(boundary_partition(&lam, t).unwrap(), mu);
    }

    #[test]
    fn boundary_then_skew_is_identity((lam, t) in core_with_t()) {
        let mu = boundary_partition(&lam, t).unwrap();
        prop_assert!(mu.largest() < t);
        prop_assert_eq!(mu.size(), t_interior(&lam, t).unwrap().boundary_size);
        prop_assert_eq!(skew_inverse(&mu, t).unwrap(), lam);
    }

    #[test]
    fn witnesses_survive_transposition(n in 2usize..=9, k_seed in 0usize..8, t in 0usize..8, i in 0usize..12, j in 0usize..20) {
        let k = 1 + k_seed % (n - 1);
        let q = KnijtQuery::new(k, n, i, j, t).unwrap();
        let en = Enumerator::default();
        let here = en.knijt_witnesses(&q, usize::MAX).unwrap();
        let there = en.knijt_witnesses(&q.transposed(), usize::MAX).unwrap();
        let mut conj: Vec<Partition> = here.iter().map(Partition::conjugate).collect();
        conj.sort_by(|a, b| a.parts().cmp(b.parts()));
        let mut there_sorted = there;
        there_sorted.sort_by(|a, b| a.parts().cmp(b.parts()));
        prop_assert_eq!(conj, there_sorted);
        let naive = common::knijt_witnesses(k, n, i, j, t);
        prop_assert_eq!(here.len(), naive.len());
    }

    #[test]
    fn tables_are_transpose_symmetric(n in 2usize..=7, k_seed in 0usize..6, t in -4i64..=8) {
        let k = 1 + k_seed % (n - 1);
        prop_assert_eq!(hodge_table(k, n, t).unwrap().entries, hodge_table(n - k, n, t).unwrap().entries);
    }
}
