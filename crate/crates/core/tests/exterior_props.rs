use e8spin7::exterior::{
    algebra_action, basis_indices, group_action, hodge_star, pairing, wedge, KForm,
};
use e8spin7::field::{CycMatrix, CycNum};
use proptest::prelude::*;

const DIM: usize = 6;

fn form(k: usize) -> impl Strategy<Value = KForm> {
    let basis = basis_indices(DIM, k);
    proptest::collection::vec(-3i64..=3, basis.len()).prop_map(move |v| {
        let c: Vec<CycNum> = v.into_iter().map(CycNum::from_int).collect();
        KForm::from_vector(DIM, k, &basis, &c)
    })
}

fn matrix() -> impl Strategy<Value = CycMatrix> {
    proptest::collection::vec(-2i64..=2, DIM * DIM)
        .prop_map(|v| CycMatrix::from_fn(DIM, DIM, |i, j| CycNum::from_int(v[i * DIM + j])))
}

fn sign(e: usize) -> CycNum {
    CycNum::from_int(if e.is_multiple_of(2) { 1 } else { -1 })
}

proptest! {
    #[test]
    fn graded_commutative_and_associative(a in form(1), b in form(2), c in form(2)) {
        let ab = wedge(&a, &b).unwrap();
        prop_assert_eq!(&ab, &wedge(&b, &a).unwrap().scale(&sign(2)));
        let bc = wedge(&b, &c).unwrap();
        prop_assert_eq!(wedge(&ab, &c).unwrap(), wedge(&a, &bc).unwrap());
        prop_assert!(wedge(&a, &a).unwrap().is_zero());
    }

    #[test]
    fn star_properties(a in form(2), b in form(2)) {
        let ss = hodge_star(&hodge_star(&a));
        prop_assert_eq!(ss, a.scale(&sign(2 * (DIM - 2))));
        let lhs = wedge(&a, &hodge_star(&b)).unwrap();
        prop_assert_eq!(lhs, KForm::volume(DIM).scale(&pairing(&a, &b).unwrap()));
    }

    #[test]
    fn derivation_obeys_leibniz(r in matrix(), a in form(1), b in form(2)) {
        let lhs = algebra_action(&r, &wedge(&a, &b).unwrap()).unwrap();
        let rhs = wedge(&algebra_action(&r, &a).unwrap(), &b)
            .unwrap()
            .try_add(&wedge(&a, &algebra_action(&r, &b).unwrap()).unwrap())
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn group_action_is_multiplicative(g in matrix(), a in form(2), b in form(1)) {
        if g.determinant().unwrap().is_zero() {
            return Ok(());
        }
        let lhs = group_action(&g, &wedge(&a, &b).unwrap()).unwrap();
        let rhs = wedge(&group_action(&g, &a).unwrap(), &group_action(&g, &b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        // top degree scales by the determinant
        let vol = group_action(&g, &KForm::volume(DIM)).unwrap();
        prop_assert_eq!(vol, KForm::volume(DIM).scale(&g.determinant().unwrap()));
    }
}
