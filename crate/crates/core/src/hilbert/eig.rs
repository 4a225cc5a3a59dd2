//! Small dense Hermitian eigenvalue routines.
//!
//! The spaces in play are tiny (local dimensions of a few), so a cyclic
//! Jacobi sweep is plenty: no external linear-algebra dependency, machine
//! precision after a handful of sweeps.

use num_complex::Complex;

use crate::float::{real, Real};
use crate::hilbert::hermitian::HermitianMatrix;

/// Eigenvalues of a Hermitian matrix given as a row-major buffer, ascending.
pub fn hermitian_eigenvalues<T: Real>(dim: usize, entries: &[Complex<T>]) -> Vec<T> {
    debug_assert_eq!(entries.len(), dim * dim);
    let mut a = entries.to_vec();
    let tol = real::<T>(1e-14) * frobenius(&a).max(T::one());
    for _sweep in 0..60 {
        if off_diagonal_norm(dim, &a) <= tol {
            break;
        }
        for p in 0..dim {
            for q in (p + 1)..dim {
                rotate(dim, &mut a, p, q);
            }
        }
    }
    let mut eigs: Vec<T> = (0..dim).map(|i| a[i * dim + i].re).collect();
    eigs.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    eigs
}

/// One complex Jacobi rotation zeroing the (p,q) entry.
fn rotate<T: Real>(dim: usize, a: &mut [Complex<T>], p: usize, q: usize) {
    let apq = a[p * dim + q];
    let mag = apq.norm();
    if mag == T::zero() {
        return;
    }
    // Phase factor turning a_pq real, then a real Jacobi rotation on the
    // resulting symmetric 2×2 block.
    let phase = apq.unscale(mag).conj(); // e^{-iφ}
    let app = a[p * dim + p].re;
    let aqq = a[q * dim + q].re;
    let tau = (aqq - app) / (mag + mag);
    let t = if tau >= T::zero() {
        (tau + (T::one() + tau * tau).sqrt()).recip()
    } else {
        -((-tau + (T::one() + tau * tau).sqrt()).recip())
    };
    let c = (T::one() + t * t).sqrt().recip();
    let s = t * c;

    for i in 0..dim {
        if i == p || i == q {
            continue;
        }
        let bip = a[i * dim + p];
        let biq = a[i * dim + q] * phase;
        let new_ip = bip.scale(c) - biq.scale(s);
        let new_iq = bip.scale(s) + biq.scale(c);
        a[i * dim + p] = new_ip;
        a[p * dim + i] = new_ip.conj();
        a[i * dim + q] = new_iq;
        a[q * dim + i] = new_iq.conj();
    }
    let two = T::one() + T::one();
    let new_pp = c * c * app - two * s * c * mag + s * s * aqq;
    let new_qq = s * s * app + two * s * c * mag + c * c * aqq;
    a[p * dim + p] = Complex::new(new_pp, T::zero());
    a[q * dim + q] = Complex::new(new_qq, T::zero());
    a[p * dim + q] = Complex::new(T::zero(), T::zero());
    a[q * dim + p] = Complex::new(T::zero(), T::zero());
}

fn off_diagonal_norm<T: Real>(dim: usize, a: &[Complex<T>]) -> T {
    let mut s = T::zero();
    for i in 0..dim {
        for j in 0..dim {
            if i != j {
                s = s + a[i * dim + j].norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn frobenius<T: Real>(a: &[Complex<T>]) -> T {
    a.iter()
        .map(|x| x.norm_sqr())
        .fold(T::zero(), |s, x| s + x)
        .sqrt()
}

/// Spectral decomposition of a 2×2 Hermitian observable as (eigenvalue,
/// rank-one projector matrix) pairs summing to the identity.
pub fn spectral_qubit<T: Real>(m: &HermitianMatrix<T>) -> crate::error::Result<Vec<(T, HermitianMatrix<T>)>> {
    if m.dim() != 2 {
        return Err(crate::error::Error::UnsupportedDimension {
            expected: 2,
            found: m.dim(),
        });
    }
    let a = m.entry(0, 0).re;
    let c = m.entry(1, 1).re;
    let b = m.entry(0, 1);
    if b.norm() == T::zero() {
        let p0 = HermitianMatrix::diagonal(&[T::one(), T::zero()]);
        let p1 = HermitianMatrix::diagonal(&[T::zero(), T::one()]);
        return Ok(vec![(a, p0), (c, p1)]);
    }
    let half = real::<T>(0.5);
    let mean = (a + c) * half;
    let r = (((a - c) * half).powi(2) + b.norm_sqr()).sqrt();
    let lambdas = [mean + r, mean - r];
    let mut parts = Vec::with_capacity(2);
    for lam in lambdas {
        // Two algebraically equivalent eigenvector forms; take the better
        // conditioned one.
        let v1 = [b, Complex::new(lam - a, T::zero())];
        let v2 = [Complex::new(lam - c, T::zero()), b.conj()];
        let n1 = v1[0].norm_sqr() + v1[1].norm_sqr();
        let n2 = v2[0].norm_sqr() + v2[1].norm_sqr();
        let (v, n) = if n1 >= n2 { (v1, n1) } else { (v2, n2) };
        let inv = n.recip();
        let entries = vec![
            (v[0] * v[0].conj()).scale(inv),
            (v[0] * v[1].conj()).scale(inv),
            (v[1] * v[0].conj()).scale(inv),
            (v[1] * v[1].conj()).scale(inv),
        ];
        // Symmetrize bit-exactly.
        let mut e = entries;
        e[0] = Complex::new(e[0].re, T::zero());
        e[3] = Complex::new(e[3].re, T::zero());
        e[2] = e[1].conj();
        parts.push((lam, HermitianMatrix::new(2, e)?));
    }
    Ok(parts)
}
