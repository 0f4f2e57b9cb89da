use rand::seq::SliceRandom;
use rand::Rng;

use super::table::SparseVec;
use super::{basis_element, E8Elem, E8Error, DIM};
use crate::exterior::group_action_unchecked;
use crate::field::{CycMatrix, CycNum};

/// `w(R, x, y) = (R, ωx, ω²y)`.
pub fn w_apply(x: &E8Elem) -> E8Elem {
    let w = CycNum::omega();
    E8Elem::new_unchecked(x.r().clone(), x.x().scale(&w), x.y().scale(&w.pow(2)))
}

/// `τ̂(R, x, y) = (−τᵗR, −τx, −τy)` with τ complex conjugation.
pub fn tau_hat(x: &E8Elem) -> E8Elem {
    let minus = CycNum::from_int(-1);
    E8Elem::new_unchecked(
        x.r().adjoint().scale(&minus),
        x.x().conj().scale(&minus),
        x.y().conj().scale(&minus),
    )
}

/// The conjugate-linear involution `σ(R, x, y) = (−R†, −τy, −τx)` whose fixed
/// points form the compact real form.
pub fn sigma(x: &E8Elem) -> E8Elem {
    let minus = CycNum::from_int(-1);
    E8Elem::new_unchecked(
        x.r().adjoint().scale(&minus),
        x.y().conj().scale(&minus),
        x.x().conj().scale(&minus),
    )
}

fn check_special_unitary(a: &CycMatrix) -> Result<(), E8Error> {
    if a.rows() != 9 || a.cols() != 9 {
        return Err(E8Error::NotSpecialUnitary);
    }
    if &a.adjoint() * a != CycMatrix::identity(9) {
        return Err(E8Error::NotSpecialUnitary);
    }
    if !a.determinant().map_err(|_| E8Error::NotSpecialUnitary)?.is_one() {
        return Err(E8Error::NotSpecialUnitary);
    }
    Ok(())
}

/// `φ(A)(R, x, y) = (ARA⁻¹, A·x, (A⁻¹)ᵗ·y)` for `A ∈ SU(9)`.
pub fn phi_act(a: &CycMatrix, x: &E8Elem) -> Result<E8Elem, E8Error> {
    check_special_unitary(a)?;
    Ok(phi_unchecked(a, x))
}

fn phi_unchecked(a: &CycMatrix, x: &E8Elem) -> E8Elem {
    let a_inv = a.adjoint();
    // (A⁻¹)ᵗ = conj(A) for unitary A
    let dual = a.conj();
    let r = &(a * x.r()) * &a_inv;
    let act = |m: &CycMatrix, f: &crate::exterior::KForm| {
        if f.is_zero() {
            f.clone()
        } else {
            group_action_unchecked(m, f).expect("9x9 on C^9")
        }
    };
    E8Elem::new_unchecked(r, act(a, x.x()), act(&dual, x.y()))
}

/// Images `φ(A)e_k` of all canonical basis elements, as sparse coordinates.
pub fn phi_images(a: &CycMatrix) -> Result<Vec<SparseVec>, E8Error> {
    check_special_unitary(a)?;
    Ok((0..DIM)
        .map(|k| phi_unchecked(a, &basis_element(k)).to_sparse())
        .collect())
}

/// The matrix sending `e_j` to `ζ^{phases[j]} e_{perm[j]}`.
pub fn phased_permutation(perm: &[usize], phases: &[i64]) -> CycMatrix {
    let n = perm.len();
    let mut m = CycMatrix::zeros(n, n);
    for j in 0..n {
        m[(perm[j], j)] = CycNum::zeta_pow(phases[j]);
    }
    m
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            k = perm[k];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// A random 9×9 permutation matrix with 12th-root-of-unity phases and determinant 1.
pub fn random_phased_permutation<R: Rng>(rng: &mut R) -> CycMatrix {
    let mut perm: Vec<usize> = (0..9).collect();
    perm.shuffle(rng);
    let mut phases: Vec<i64> = (0..9).map(|_| rng.gen_range(0..12)).collect();
    // det = sgn(π)·ζ^{Σ phases}; ζ⁶ = −1
    let target = if permutation_sign(&perm) == 1 { 0 } else { 6 };
    let partial: i64 = phases[..8].iter().sum();
    phases[8] = (target - partial).rem_euclid(12);
    phased_permutation(&perm, &phases)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::e8::bracket;
    use crate::exterior::KForm;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sample() -> E8Elem {
        let mut r = CycMatrix::zeros(9, 9);
        r[(0, 3)] = CycNum::i();
        r[(2, 2)] = CycNum::omega();
        r[(5, 5)] = -CycNum::omega();
        r[(7, 1)] = CycNum::frac(1, 2);
        let x = KForm::monomial(9, &[1, 4, 7], CycNum::zeta()).unwrap();
        let y = KForm::monomial(9, &[2, 5, 9], CycNum::from_int(3)).unwrap();
        E8Elem::new(r, x, y).unwrap()
    }

    #[test]
    fn w_fixes_matrices_and_has_order_three() {
        let r = basis_element(5);
        assert_eq!(w_apply(&r), r);
        let x = sample();
        assert_eq!(w_apply(&w_apply(&w_apply(&x))), x);
        assert_ne!(w_apply(&x), x);
    }

    #[test]
    fn tau_hat_examples() {
        let mut r = CycMatrix::zeros(9, 9);
        r[(0, 1)] = CycNum::from_int(2);
        r[(1, 0)] = CycNum::from_int(2);
        r[(3, 3)] = CycNum::one();
        r[(4, 4)] = CycNum::from_int(-1);
        let s = E8Elem::from_matrix(r.clone()).unwrap();
        assert_eq!(tau_hat(&s), E8Elem::from_matrix(r.scale(&CycNum::from_int(-1))).unwrap());
        let x = sample();
        assert_eq!(tau_hat(&tau_hat(&x)), x);
        assert_eq!(tau_hat(&x.scale(&CycNum::i())), tau_hat(&x).scale(&-CycNum::i()));
    }

    #[test]
    fn phi_of_cube_roots_is_identity() {
        let x = sample();
        assert_eq!(phi_act(&CycMatrix::identity(9), &x).unwrap(), x);
        for k in 1..3 {
            let w = CycMatrix::scalar(9, &CycNum::omega().pow(k));
            assert_eq!(phi_act(&w, &x).unwrap(), x);
        }
    }

    #[test]
    fn phi_rejects_non_special_unitary() {
        let x = sample();
        let i_id = CycMatrix::scalar(9, &CycNum::i());
        assert_eq!(phi_act(&i_id, &x), Err(E8Error::NotSpecialUnitary));
        let mut d = CycMatrix::identity(9);
        d[(0, 0)] = CycNum::from_int(2);
        d[(1, 1)] = CycNum::frac(1, 2);
        assert_eq!(phi_act(&d, &x), Err(E8Error::NotSpecialUnitary));
    }

    #[test]
    fn phi_preserves_a_bracket() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = random_phased_permutation(&mut rng);
        let x = sample();
        let y = w_apply(&basis_element(200)).add(&basis_element(10));
        let lhs = phi_act(&a, &bracket(&x, &y)).unwrap();
        let rhs = bracket(&phi_act(&a, &x).unwrap(), &phi_act(&a, &y).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn random_phased_permutations_are_special_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let a = random_phased_permutation(&mut rng);
            assert!(check_special_unitary(&a).is_ok());
        }
    }
}
