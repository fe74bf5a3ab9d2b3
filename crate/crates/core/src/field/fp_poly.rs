//! Dense polynomials over a prime field, used only to validate and search
//! for field moduli. Coefficients are stored constant term first.

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors, ascending.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(a: u32, mut e: u32, p: u32) -> u32 {
    let mut acc = 1u64;
    let p64 = p as u64;
    let mut base = (a % p) as u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p64;
        }
        base = base * base % p64;
        e >>= 1;
    }
    acc as u32
}

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn rem(a: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    let mut a = trim(a.to_vec());
    let df = f.len() - 1;
    let lead_inv = inv_mod(f[df], p);
    while a.len() > df {
        let da = a.len() - 1;
        let c = (a[da] as u64 * lead_inv as u64 % p as u64) as u32;
        let shift = da - df;
        for (i, &fi) in f.iter().enumerate() {
            let sub = (c as u64 * fi as u64 % p as u64) as u32;
            a[shift + i] = (a[shift + i] + p - sub) % p;
        }
        a = trim(a);
    }
    a
}

fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    trim(out.into_iter().map(|c| c as u32).collect())
}

fn mulmod(a: &[u32], b: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    rem(&mul(a, b, p), f, p)
}

fn powmod(a: &[u32], mut e: u64, f: &[u32], p: u32) -> Vec<u32> {
    let mut acc = vec![1u32];
    let mut base = rem(a, f, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(&acc, &base, f, p);
        }
        base = mulmod(&base, &base, f, p);
        e >>= 1;
    }
    acc
}

fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Rabin's test: `f` of degree d is irreducible iff x^(p^d) = x mod f and
/// gcd(x^(p^(d/l)) - x, f) = 1 for every prime l dividing d.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let f = trim(f.to_vec());
    if f.len() < 2 {
        return false;
    }
    let d = f.len() - 1;
    if d == 1 {
        return true;
    }
    let x = vec![0u32, 1];
    // frob[k] = x^(p^k) mod f
    let mut frob = vec![rem(&x, &f, p)];
    for _ in 0..d {
        let next = powmod(frob.last().unwrap(), p as u64, &f, p);
        frob.push(next);
    }
    if !sub(&frob[d], &frob[0], p).is_empty() {
        return false;
    }
    for l in prime_factors(d as u64) {
        let k = d / l as usize;
        let h = sub(&frob[k], &x, p);
        let g = gcd(&f, &h, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Monic irreducible of degree `d` with the smallest integer encoding
/// sum(c_i * p^i).
pub(crate) fn smallest_irreducible(p: u32, d: u32) -> Vec<u32> {
    let base = (p as u64).pow(d);
    for v in base..2 * base {
        let mut digits = Vec::with_capacity(d as usize + 1);
        let mut x = v;
        for _ in 0..=d {
            digits.push((x % p as u64) as u32);
            x /= p as u64;
        }
        if d > 1 && digits[0] == 0 {
            continue;
        }
        if is_irreducible(&digits, p) {
            return digits;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes() {
        let primes: Vec<u32> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn binary_cubics() {
        assert!(is_irreducible(&[1, 1, 0, 1], 2));
        assert!(is_irreducible(&[1, 0, 1, 1], 2));
        assert!(!is_irreducible(&[1, 0, 0, 1], 2)); // x^3+1 = (x+1)(x^2+x+1)
        assert!(!is_irreducible(&[0, 1, 0, 1], 2));
    }

    #[test]
    fn quartic_product_of_quadratics_is_rejected() {
        // (x^2+x+1)^2 = x^4+x^2+1 has no roots but is reducible
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
        assert!(is_irreducible(&[1, 1, 0, 0, 1], 2));
    }

    #[test]
    fn defaults_match_brute_force_root_search() {
        assert_eq!(smallest_irreducible(2, 3), vec![1, 1, 0, 1]);
        assert_eq!(smallest_irreducible(2, 4), vec![1, 1, 0, 0, 1]);
        // x^2 + 1 is irreducible mod 3
        assert_eq!(smallest_irreducible(3, 2), vec![1, 0, 1]);
        assert_eq!(smallest_irreducible(2, 1), vec![0, 1]);
    }

    #[test]
    fn factoring() {
        assert_eq!(prime_factors(15), vec![3, 5]);
        assert_eq!(prime_factors(63), vec![3, 7]);
        assert_eq!(prime_factors(1), Vec::<u64>::new());
    }
}
