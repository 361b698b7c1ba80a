//! Small dense linear algebra helpers: exact rational inversion, complex
//! determinants and permanents, permutation signs.

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{One, Zero};

pub type Q = Rational64;
pub type C64 = Complex64;

/// Gauss-Jordan inverse over the rationals. `None` if singular.
pub fn rat_inverse(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m.to_vec();
    let mut inv: Vec<Vec<Q>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let t = a[col][j] * f;
                    a[r][j] -= t;
                    let t = inv[col][j] * f;
                    inv[r][j] -= t;
                }
            }
        }
    }
    Some(inv)
}

pub fn rat_matmul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            (0..m)
                .map(|j| (0..k).fold(Q::zero(), |acc, l| acc + row[l] * b[l][j]))
                .collect()
        })
        .collect()
}

/// Determinant by LU with partial pivoting.
pub fn det_c(mut a: Vec<Vec<C64>>) -> C64 {
    let n = a.len();
    let mut det = C64::one();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&x, &y| a[x][col].norm().total_cmp(&a[y][col].norm()))
            .unwrap();
        if a[pivot][col].norm() == 0.0 {
            return C64::zero();
        }
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        for r in col + 1..n {
            let f = a[r][col] / p;
            if f != C64::zero() {
                for j in col..n {
                    let t = a[col][j] * f;
                    a[r][j] -= t;
                }
            }
        }
    }
    det
}

pub fn det_f(a: Vec<Vec<f64>>) -> f64 {
    det_c(
        a.into_iter()
            .map(|r| r.into_iter().map(|v| C64::new(v, 0.0)).collect())
            .collect(),
    )
    .re
}

/// Permanent by Ryser's formula with Gray-code subset enumeration.
pub fn permanent_c(a: &[Vec<C64>]) -> C64 {
    let n = a.len();
    if n == 0 {
        return C64::one();
    }
    let mut row_sums = vec![C64::zero(); n];
    let mut total = C64::zero();
    let mut gray: u64 = 0;
    for k in 1..(1u64 << n) {
        let next = k ^ (k >> 1);
        let changed = (gray ^ next).trailing_zeros() as usize;
        let adding = next & (1 << changed) != 0;
        for (i, s) in row_sums.iter_mut().enumerate() {
            if adding {
                *s += a[i][changed];
            } else {
                *s -= a[i][changed];
            }
        }
        gray = next;
        let prod = row_sums.iter().fold(C64::one(), |acc, &v| acc * v);
        let size = next.count_ones() as usize;
        if (n - size) % 2 == 0 {
            total += prod;
        } else {
            total -= prod;
        }
    }
    total
}

pub fn permanent_f(a: &[Vec<f64>]) -> f64 {
    let c: Vec<Vec<C64>> = a
        .iter()
        .map(|r| r.iter().map(|&v| C64::new(v, 0.0)).collect())
        .collect();
    permanent_c(&c).re
}

/// Sign of a permutation given as images of `0..n`.
pub fn perm_sign(p: &[usize]) -> i32 {
    let mut seen = vec![false; p.len()];
    let mut sign = 1;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            j = p[j];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Product of factorials of the multiplicities of equal entries.
pub fn multiplicity_factor<T: PartialEq>(v: &[T]) -> u64 {
    let mut used = vec![false; v.len()];
    let mut f = 1;
    for i in 0..v.len() {
        if used[i] {
            continue;
        }
        let mut c = 0;
        for j in i..v.len() {
            if !used[j] && v[j] == v[i] {
                used[j] = true;
                c += 1;
            }
        }
        f *= factorial(c);
    }
    f
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}
