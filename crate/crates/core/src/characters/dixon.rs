//! Modular computation of the complex character table.
//!
//! Class-algebra structure constants are diagonalized over a prime
//! field `F_p` with `p ≡ 1 (mod exp G)`, and the eigenvalue data is
//! lifted to exact cyclotomic values through the discrete Fourier sum
//! over power maps. The prime is chosen larger than twice the maximal
//! class size and larger than `2√|G|`, which makes the degree and
//! multiplicity recovery from residues unambiguous.

use crate::exact::{Cyclotomic, ExactScalar};
use crate::groups::FiniteGroup;

pub(super) struct ModTable {
    /// `values[j][i]` = character `j` at class `i`, exact.
    pub values: Vec<Vec<Cyclotomic>>,
    pub degrees: Vec<u64>,
    pub prime: u64,
}

fn is_prime(n: u64) -> bool {
    crate::groups::is_prime(n)
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc: u64 = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Smallest prime `p ≡ 1 (mod m)` with `p > 2·max_class` and `p² > 4|G|`.
fn dixon_prime(m: u64, order: u64, max_class: u64) -> u64 {
    let mut p = m + 1;
    loop {
        if p > 2 * max_class && (p as u128) * (p as u128) > 4 * order as u128 && is_prime(p) {
            return p;
        }
        p += m;
    }
}

/// A primitive `m`-th root of unity modulo `p`.
fn primitive_root_of_unity(m: u64, p: u64) -> u64 {
    // factor p-1
    let mut rest = p - 1;
    let mut prime_factors = Vec::new();
    let mut f = 2;
    while f * f <= rest {
        if rest % f == 0 {
            prime_factors.push(f);
            while rest % f == 0 {
                rest /= f;
            }
        }
        f += 1;
    }
    if rest > 1 {
        prime_factors.push(rest);
    }
    let generator = (2..p)
        .find(|&w| prime_factors.iter().all(|&q| powmod(w, (p - 1) / q, p) != 1))
        .expect("F_p^* is cyclic");
    let z = powmod(generator, (p - 1) / m, p);
    debug_assert_eq!(powmod(z, m, p), 1);
    z
}

type FpMat = Vec<Vec<u64>>;

fn fp_rref(m: &mut FpMat, p: u64) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = invmod(m[r][c], p);
        for j in 0..cols {
            m[r][j] = mulmod(m[r][j], inv, p);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    let t = mulmod(f, m[r][j], p);
                    m[i][j] = (m[i][j] + p - t) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Kernel basis vectors of `m` over `F_p`.
fn fp_kernel(m: &FpMat, p: u64) -> Vec<Vec<u64>> {
    let cols = if m.is_empty() { 0 } else { m[0].len() };
    let mut red = m.clone();
    let pivots = fp_rref(&mut red, p);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = (p - red[row][free]) % p;
        }
        basis.push(v);
    }
    basis
}

/// Solves `B·x = rhs` for one vector over `F_p`; `B` given by columns.
fn fp_solve(b_cols: &[Vec<u64>], rhs: &[u64], p: u64) -> Option<Vec<u64>> {
    let rows = rhs.len();
    let k = b_cols.len();
    let mut aug: FpMat = (0..rows)
        .map(|r| {
            let mut row: Vec<u64> = b_cols.iter().map(|c| c[r]).collect();
            row.push(rhs[r]);
            row
        })
        .collect();
    let pivots = fp_rref(&mut aug, p);
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![0u64; k];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[row][k];
    }
    Some(x)
}

fn mat_vec(m: &FpMat, v: &[u64], p: u64) -> Vec<u64> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0u64, |acc, (&a, &b)| (acc + mulmod(a, b, p)) % p)
        })
        .collect()
}

/// Common eigenvectors of the class multiplication matrices, normalized
/// at the identity class.
fn common_eigenvectors(class_matrices: &[FpMat], r: usize, p: u64) -> Vec<Vec<u64>> {
    // subspaces as lists of basis columns
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r)
        .map(|i| {
            let mut e = vec![0u64; r];
            e[i] = 1;
            e
        })
        .collect()];
    for mi in class_matrices {
        let mut next = Vec::new();
        for basis in spaces {
            let k = basis.len();
            if k == 1 {
                next.push(basis);
                continue;
            }
            // restriction of mi to the subspace
            let mut restr: FpMat = vec![vec![0u64; k]; k];
            for (c, bvec) in basis.iter().enumerate() {
                let img = mat_vec(mi, bvec, p);
                let x = fp_solve(&basis, &img, p).expect("class matrix preserves the subspace");
                for (row, &val) in x.iter().enumerate() {
                    restr[row][c] = val;
                }
            }
            // split into eigenspaces by scanning eigenvalues
            let mut found = 0;
            let mut pieces = Vec::new();
            for lambda in 0..p {
                if found == k {
                    break;
                }
                let shifted: FpMat = (0..k)
                    .map(|i| {
                        (0..k)
                            .map(|j| {
                                if i == j {
                                    (restr[i][j] + p - lambda) % p
                                } else {
                                    restr[i][j]
                                }
                            })
                            .collect()
                    })
                    .collect();
                let ker = fp_kernel(&shifted, p);
                if ker.is_empty() {
                    continue;
                }
                found += ker.len();
                let sub: Vec<Vec<u64>> = ker
                    .iter()
                    .map(|coeffs| {
                        let mut v = vec![0u64; basis[0].len()];
                        for (c, bvec) in basis.iter().enumerate() {
                            for (i, val) in v.iter_mut().enumerate() {
                                *val = (*val + mulmod(coeffs[c], bvec[i], p)) % p;
                            }
                        }
                        v
                    })
                    .collect();
                pieces.push(sub);
            }
            assert_eq!(found, k, "class matrix must be diagonalizable over F_p");
            next.extend(pieces);
        }
        spaces = next;
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
    }
    assert!(
        spaces.iter().all(|s| s.len() == 1),
        "class matrices separate all characters"
    );
    spaces
        .into_iter()
        .map(|s| {
            let v = s.into_iter().next().unwrap();
            let norm = invmod(v[0], p);
            v.iter().map(|&x| mulmod(x, norm, p)).collect()
        })
        .collect()
}

pub(super) fn modular_character_table(group: &FiniteGroup) -> ModTable {
    let classes = group.conjugacy_classes();
    let r = classes.count();
    let order = group.order() as u64;
    let exponent = group.exponent();
    let max_class = *classes.sizes().iter().max().unwrap() as u64;
    let p = dixon_prime(exponent, order, max_class);
    let z = primitive_root_of_unity(exponent, p);

    // structure constants: M_i[k][j] = #{x in C_i : x^{-1}·g_k in C_j}
    let mut class_matrices: Vec<FpMat> = vec![vec![vec![0u64; r]; r]; r];
    for i in 0..r {
        for &x in classes.members(i) {
            let xinv = group.inv(x);
            for (k, &gk) in classes.reps().iter().enumerate() {
                let j = classes.class_of(group.mul(xinv, gk));
                class_matrices[i][k][j] += 1;
            }
        }
        for row in class_matrices[i].iter_mut() {
            for e in row.iter_mut() {
                *e %= p;
            }
        }
    }

    let eigen = common_eigenvectors(&class_matrices, r, p);
    assert_eq!(eigen.len(), r);

    let inv_class: Vec<usize> = (0..r).map(|i| classes.inverse_class(i)).collect();
    let class_sizes: Vec<u64> = classes.sizes().iter().map(|&s| s as u64).collect();

    let mut values = Vec::with_capacity(r);
    let mut degrees = Vec::with_capacity(r);
    for v in &eigen {
        // The common eigenvectors normalized at the identity class are
        // the idempotent coefficient vectors v_j = χ(g_j⁻¹)/χ(1), so
        // first orthogonality reads |G| = deg²·Σ_j |C_j|·v_j·v_{j'}.
        let mut s = 0u64;
        for i in 0..r {
            let t = mulmod(v[i], v[inv_class[i]], p);
            s = (s + mulmod(t, class_sizes[i] % p, p)) % p;
        }
        let deg_sq = mulmod(order % p, invmod(s, p), p);
        let mut degree = 0u64;
        let mut c = 1u64;
        while c * c <= order {
            if mulmod(c % p, c % p, p) == deg_sq {
                degree = c;
                break;
            }
            c += 1;
        }
        assert!(degree > 0, "degree recovery failed");

        // theta_i = chi(g_i) = deg·v_{i'} mod p
        let theta: Vec<u64> = (0..r)
            .map(|i| mulmod(v[inv_class[i]], degree % p, p))
            .collect();

        // lift each class value through the Fourier sum over power maps
        let mut row = Vec::with_capacity(r);
        for i in 0..r {
            let n = group.element_order(classes.reps()[i]) as u64;
            let zn = powmod(z, exponent / n, p);
            let ninv = invmod(n % p, p);
            let mut value: Cyclotomic = ExactScalar::zero();
            for k in 0..n {
                let mut acc = 0u64;
                for j in 0..n {
                    let cls = group.power_class(i, j);
                    let w = powmod(zn, (n - (mulmod(j % n, k % n, n))) % n, p);
                    acc = (acc + mulmod(theta[cls], w, p)) % p;
                }
                let mult = mulmod(acc, ninv, p);
                assert!(
                    mult <= degree,
                    "eigenvalue multiplicity exceeds the degree"
                );
                if mult > 0 {
                    let zeta = Cyclotomic::root_of_unity(exponent, k * (exponent / n));
                    value = value.add(&zeta.scale(&crate::exact::rat(mult as i64, 1)));
                }
            }
            row.push(value);
        }
        values.push(row);
        degrees.push(degree);
    }

    ModTable {
        values,
        degrees,
        prime: p,
    }
}
