//! Dense polynomials over the prime field F_p, stored low-to-high as residues.
//!
//! These helpers back the extension-field arithmetic and the irreducibility
//! test for moduli. The zero polynomial is the empty vector.

pub(crate) fn mul_mod_p(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod_p(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_p(acc, base, p);
        }
        base = mul_mod_p(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue via Fermat's little theorem.
pub(crate) fn inv_mod_p(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod_p(a, p - 2, p)
}

pub(crate) fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out: Vec<u64> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod_p(x, y, p)) % p;
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder of `a` by the nonzero polynomial `b`.
pub(crate) fn divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut rem = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead_inv = inv_mod_p(*b.last().unwrap(), p);
    let mut quot = vec![0u64; rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = mul_mod_p(*rem.last().unwrap(), lead_inv, p);
        quot[shift] = c;
        for (j, &y) in b.iter().enumerate() {
            let t = mul_mod_p(c, y, p);
            rem[shift + j] = (rem[shift + j] + p - t) % p;
        }
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

pub(crate) fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    divrem(a, b, p).1
}

pub(crate) fn make_monic(mut a: Vec<u64>, p: u64) -> Vec<u64> {
    if let Some(&lead) = a.last() {
        let inv = inv_mod_p(lead, p);
        for c in a.iter_mut() {
            *c = mul_mod_p(*c, inv, p);
        }
    }
    a
}

/// Monic gcd; the gcd of two zero polynomials is zero.
pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    make_monic(x, p)
}

/// `base^exp mod modulus`.
pub(crate) fn pow_mod_poly(base: &[u64], mut exp: u64, modulus: &[u64], p: u64) -> Vec<u64> {
    let mut acc = rem(&[1], modulus, p);
    let mut b = rem(base, modulus, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), modulus, p);
        }
        b = rem(&mul(&b, &b, p), modulus, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo the irreducible `modulus` by extended Euclid.
/// Returns `None` when `a` is zero modulo `modulus`.
pub(crate) fn inv_mod_poly(a: &[u64], modulus: &[u64], p: u64) -> Option<Vec<u64>> {
    let mut r0 = modulus.to_vec();
    let mut r1 = rem(a, modulus, p);
    if r1.is_empty() {
        return None;
    }
    let mut s0: Vec<u64> = Vec::new();
    let mut s1: Vec<u64> = vec![1];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    // r0 is a nonzero constant when gcd(a, modulus) = 1
    if r0.len() != 1 {
        return None;
    }
    let c = inv_mod_p(r0[0], p);
    let out: Vec<u64> = s0.iter().map(|&x| mul_mod_p(x, c, p)).collect();
    Some(rem(&out, modulus, p))
}

/// Rabin-style test: a monic `f` of degree `k` is irreducible iff
/// gcd(f, u^{p^i} - u) = 1 for every 1 <= i <= k/2.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let k = f.len().saturating_sub(1);
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    let u = vec![0, 1];
    let mut frob = u.clone();
    for _ in 1..=k / 2 {
        frob = pow_mod_poly(&frob, p, f, p);
        let g = gcd(f, &sub(&frob, &u, p), p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}
