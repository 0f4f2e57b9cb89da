//! Exact eigendecomposition for rational matrices with rational spectrum.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{CycMatrix, CycNum, FieldError};

/// One eigenvalue with its eigenspace.
#[derive(Clone, Debug)]
pub struct Eigenspace {
    pub value: BigRational,
    pub multiplicity: usize,
    pub basis: Vec<Vec<CycNum>>,
}

/// Characteristic polynomial `det(xI − M)` by Faddeev–LeVerrier.
///
/// Coefficients are returned lowest degree first; the leading coefficient is 1.
pub fn characteristic_polynomial(m: &CycMatrix) -> Result<Vec<BigRational>, FieldError> {
    if !m.is_square() {
        return Err(FieldError::Shape("characteristic polynomial of a non-square matrix".into()));
    }
    let n = m.rows();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    // M_k = M (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k
    let mut acc = CycMatrix::zeros(n, n);
    for k in 1..=n {
        let shifted = &acc + &CycMatrix::scalar(n, &CycNum::from_rational(coeffs[n - k + 1].clone()));
        acc = m * &shifted;
        let tr = acc.trace();
        let tr = tr
            .as_rational()
            .ok_or(FieldError::NotRational)?
            .clone();
        coeffs[n - k] = -tr / BigRational::from_integer(BigInt::from(k));
    }
    Ok(coeffs)
}

fn eval(poly: &[BigRational], x: &BigRational) -> BigRational {
    poly.iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + c)
}

/// Divides `poly` by `(x − r)`, assuming `r` is a root.
fn deflate(poly: &[BigRational], r: &BigRational) -> Vec<BigRational> {
    let n = poly.len() - 1;
    let mut q = vec![BigRational::zero(); n];
    let mut carry = BigRational::zero();
    for k in (0..n).rev() {
        carry = &poly[k + 1] + &carry * r;
        q[k] = carry.clone();
    }
    q
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            small.push(d.clone());
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Rational roots with algebraic multiplicities; `Err` if they do not exhaust the degree.
pub fn rational_roots(poly: &[BigRational]) -> Result<Vec<(BigRational, usize)>, FieldError> {
    let mut p: Vec<BigRational> = poly.to_vec();
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    let mut roots: Vec<(BigRational, usize)> = Vec::new();
    let push = |roots: &mut Vec<(BigRational, usize)>, r: BigRational| match roots
        .iter_mut()
        .find(|(x, _)| *x == r)
    {
        Some(e) => e.1 += 1,
        None => roots.push((r, 1)),
    };
    while p.len() > 1 && p[0].is_zero() {
        p.remove(0);
        push(&mut roots, BigRational::zero());
    }
    'outer: while p.len() > 1 {
        // Clear denominators to apply the rational root theorem.
        let lcm = p
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = p
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let lead = ints.last().unwrap().clone();
        let constant = ints[0].clone();
        for q in divisors(&lead) {
            for num in divisors(&constant) {
                for s in [1, -1] {
                    let cand = BigRational::new(&num * s, q.clone());
                    if eval(&p, &cand).is_zero() {
                        p = deflate(&p, &cand);
                        push(&mut roots, cand);
                        continue 'outer;
                    }
                }
            }
        }
        return Err(FieldError::IrrationalSpectrum);
    }
    roots.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(roots)
}

/// Eigenvalues and eigenspaces of a rational matrix, largest eigenvalue first.
///
/// Fails with [`FieldError::IrrationalSpectrum`] when the characteristic polynomial
/// has irrational roots and [`FieldError::NotDiagonalizable`] when an eigenspace is
/// smaller than its algebraic multiplicity.
pub fn rational_eigenspaces(m: &CycMatrix) -> Result<Vec<Eigenspace>, FieldError> {
    if !m.is_rational() {
        return Err(FieldError::NotRational);
    }
    let poly = characteristic_polynomial(m)?;
    let roots = rational_roots(&poly)?;
    let n = m.rows();
    let mut out = Vec::new();
    for (value, alg) in roots {
        let shifted = m - &CycMatrix::scalar(n, &CycNum::from_rational(value.clone()));
        let (_, basis) = shifted.rank_kernel();
        if basis.len() != alg {
            return Err(FieldError::NotDiagonalizable);
        }
        out.push(Eigenspace {
            value,
            multiplicity: basis.len(),
            basis,
        });
    }
    debug_assert_eq!(out.iter().map(|e| e.multiplicity).sum::<usize>(), n);
    Ok(out)
}
