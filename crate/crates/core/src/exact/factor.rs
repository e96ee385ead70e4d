//! Integer factorization sized for this crate's workload: reducing rationals
//! modulo squares and listing the divisors of `m^2 + 1`.
//!
//! The pipeline is trial division by small primes, then Miller-Rabin plus
//! Brent-cycle rho splitting, and finally exhaustive trial division up to the
//! configured bound before a failure is reported. Arithmetic runs at the
//! narrowest width that fits: `u64`, then `u128` in Montgomery form, then
//! arbitrary-precision integers.

use crate::error::{Error, Result};
use num::integer::Integer;
use num::{BigInt, BigUint, One, ToPrimitive, Zero};
use std::sync::OnceLock;

/// Effort limits for [`factorize`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorConfig {
    /// Trial-division bound. Every prime factor at or below this bound is
    /// found unconditionally, whatever happens to the rho budget.
    pub trial_bound: u64,
    /// Rho iteration budget per factorization, in width-weighted units: one
    /// unit per 64-bit step, three per 128-bit step, sixteen per bignum step.
    /// Spending it all triggers the trial-division backstop.
    pub rho_budget: u64,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig {
            trial_bound: 1_000_000,
            rho_budget: 1 << 22,
        }
    }
}

impl FactorConfig {
    /// The default budget with a custom trial-division bound.
    pub fn with_trial_bound(trial_bound: u64) -> Self {
        FactorConfig {
            trial_bound,
            ..FactorConfig::default()
        }
    }
}

const QUICK_BOUND: u64 = 4096;
const FIXED_LIMIT: u128 = 1 << 126;
const RHO_BATCH: u64 = 128;
const COST_U64: u64 = 1;
const COST_U128: u64 = 3;
const COST_BIG: u64 = 16;

/// Witnesses that make Miller-Rabin deterministic below 3.3e24, which covers
/// all of `u64`.
const MR_BASES_64: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Witness set for wider inputs, where no deterministic set is known.
const MR_BASES_WIDE: [u32; 24] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
];

/// Factors `n` into `(prime, exponent)` pairs with primes in ascending order.
///
/// `factorize(1)` is the empty product and zero is rejected. A composite that
/// survives rho and the full trial-division sweep comes back as
/// [`Error::FactorizationLimitExceeded`] instead of being mislabeled prime.
pub fn factorize(n: &BigUint, config: &FactorConfig) -> Result<Vec<(BigUint, u32)>> {
    if n.is_zero() {
        return Err(Error::NonPositiveInput);
    }
    match n.to_u128() {
        Some(v) if v < FIXED_LIMIT => Ok(factor_fixed(v, config)?
            .into_iter()
            .map(|(p, e)| (BigUint::from(p), e))
            .collect()),
        _ => factor_big(n, config),
    }
}

/// All divisors of `n`, negative and positive, in ascending order.
pub fn signed_divisors(n: &BigUint) -> Result<Vec<BigInt>> {
    signed_divisors_with(n, &FactorConfig::default())
}

/// [`signed_divisors`] under an explicit effort limit.
pub fn signed_divisors_with(n: &BigUint, config: &FactorConfig) -> Result<Vec<BigInt>> {
    let factors = factorize(n, config)?;
    let mut divisors = vec![BigUint::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divisors.len() * (e as usize + 1));
        for d in &divisors {
            let mut pk = BigUint::one();
            for k in 0..=e {
                next.push(d * &pk);
                if k < e {
                    pk *= &p;
                }
            }
        }
        divisors = next;
    }
    divisors.sort_unstable();
    let mut out = Vec::with_capacity(divisors.len() * 2);
    for d in divisors.iter().rev() {
        out.push(-BigInt::from(d.clone()));
    }
    out.extend(divisors.into_iter().map(BigInt::from));
    Ok(out)
}

fn quick_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let limit = QUICK_BOUND as usize;
        let mut composite = vec![false; limit];
        let mut primes = Vec::new();
        for p in 2..limit {
            if !composite[p] {
                primes.push(p as u32);
                for multiple in (p * p..limit).step_by(p) {
                    composite[multiple] = true;
                }
            }
        }
        primes
    })
}

fn bump(out: &mut Vec<(u128, u32)>, p: u128, e: u32) {
    match out.iter_mut().find(|(q, _)| *q == p) {
        Some(entry) => entry.1 += e,
        None => out.push((p, e)),
    }
}

fn spend(budget: &mut u64, cost: u64) -> bool {
    if *budget < cost {
        *budget = 0;
        false
    } else {
        *budget -= cost;
        true
    }
}

// ---------------------------------------------------------------------------
// Fixed-width engine (n < 2^126)
// ---------------------------------------------------------------------------

fn factor_fixed(n: u128, config: &FactorConfig) -> Result<Vec<(u128, u32)>> {
    let mut budget = config.rho_budget;
    factor_fixed_budget(n, config, &mut budget)
}

fn factor_fixed_budget(
    n0: u128,
    config: &FactorConfig,
    budget: &mut u64,
) -> Result<Vec<(u128, u32)>> {
    debug_assert!((1..FIXED_LIMIT).contains(&n0));
    let mut out = Vec::new();
    let mut n = n0;
    let twos = n.trailing_zeros();
    if twos > 0 {
        bump(&mut out, 2, twos);
        n >>= twos;
    }
    let quick = config.trial_bound.min(QUICK_BOUND);
    let (rest, rest_is_prime) = match u64::try_from(n) {
        Ok(n64) => {
            let (m, flag) = strip_quick_u64(n64, quick, &mut out);
            (m as u128, flag)
        }
        Err(_) => strip_quick_u128(n, quick, &mut out),
    };
    if rest > 1 {
        if rest_is_prime {
            bump(&mut out, rest, 1);
        } else {
            split_phase(rest, config, quick, budget, &mut out)?;
        }
    }
    out.sort_unstable_by_key(|a| a.0);
    Ok(out)
}

/// Removes every odd prime factor up to `quick`. The flag reports whether the
/// scan crossed the square root, which certifies the remainder prime.
fn strip_quick_u64(mut n: u64, quick: u64, out: &mut Vec<(u128, u32)>) -> (u64, bool) {
    for &p in quick_primes() {
        let p = u64::from(p);
        if p > quick {
            return (n, false);
        }
        if (p as u128) * (p as u128) > n as u128 {
            return (n, true);
        }
        while n.is_multiple_of(p) {
            n /= p;
            bump(out, p as u128, 1);
        }
    }
    (n, false)
}

fn strip_quick_u128(mut n: u128, quick: u64, out: &mut Vec<(u128, u32)>) -> (u128, bool) {
    for &p in quick_primes() {
        if let Ok(n64) = u64::try_from(n) {
            return {
                let (m, flag) = strip_quick_u64(n64, quick, out);
                (m as u128, flag)
            };
        }
        let p = u64::from(p);
        if p > quick {
            return (n, false);
        }
        let p = p as u128;
        while n.is_multiple_of(p) {
            n /= p;
            bump(out, p, 1);
        }
    }
    (n, false)
}

enum Split {
    Prime,
    Factor(u128),
    Stalled,
}

fn split_phase(
    n: u128,
    config: &FactorConfig,
    quick: u64,
    budget: &mut u64,
    out: &mut Vec<(u128, u32)>,
) -> Result<()> {
    let mut stack = vec![n];
    let mut stalled = Vec::new();
    while let Some(m) = stack.pop() {
        debug_assert!(m > 1 && m % 2 == 1);
        match split_fixed(m, budget) {
            Split::Prime => bump(out, m, 1),
            Split::Factor(d) => {
                debug_assert!(1 < d && d < m && m % d == 0);
                stack.push(d);
                stack.push(m / d);
            }
            Split::Stalled => stalled.push(m),
        }
    }
    for m in stalled {
        trial_sweep(m, quick, config.trial_bound, out)?;
    }
    Ok(())
}

fn split_fixed(m: u128, budget: &mut u64) -> Split {
    if let Ok(m64) = u64::try_from(m) {
        if is_prime_u64(m64) {
            return Split::Prime;
        }
        match rho_u64(m64, budget) {
            Some(d) => Split::Factor(d as u128),
            None => Split::Stalled,
        }
    } else {
        if is_prime_u128(m) {
            return Split::Prime;
        }
        match rho_u128(m, budget) {
            Some(d) => Split::Factor(d),
            None => Split::Stalled,
        }
    }
}

/// Last resort for a composite rho could not split: odd trial divisors from
/// just above `from` all the way to `to`, then a final primality verdict.
fn trial_sweep(m: u128, from: u64, to: u64, out: &mut Vec<(u128, u32)>) -> Result<()> {
    // Twos are always stripped before this point, so odd candidates from 3 up.
    let mut d = (if from.is_multiple_of(2) { from + 1 } else { from + 2 }).max(3);
    let mut m = m;
    while u64::try_from(m).is_err() {
        if d > to || (d as u128) * (d as u128) > m {
            break;
        }
        while m.is_multiple_of(d as u128) {
            m /= d as u128;
            bump(out, d as u128, 1);
        }
        d += 2;
    }
    if let Ok(mut m64) = u64::try_from(m) {
        while d <= to && (d as u128) * (d as u128) <= m64 as u128 {
            while m64 % d == 0 {
                m64 /= d;
                bump(out, d as u128, 1);
            }
            d += 2;
        }
        m = m64 as u128;
    }
    if m == 1 {
        return Ok(());
    }
    let prime = match u64::try_from(m) {
        Ok(m64) => is_prime_u64(m64),
        Err(_) => is_prime_u128(m),
    };
    if prime {
        bump(out, m, 1);
        Ok(())
    } else {
        Err(Error::FactorizationLimitExceeded {
            cofactor: to_biguint(m),
        })
    }
}

fn to_biguint(v: u128) -> BigUint {
    BigUint::from(v)
}

// ---------------------------------------------------------------------------
// 64-bit arithmetic
// ---------------------------------------------------------------------------

fn add_mod_u64(a: u64, b: u64, n: u64) -> u64 {
    debug_assert!(a < n && b < n);
    let (sum, overflow) = a.overflowing_add(b);
    if overflow || sum >= n {
        sum.wrapping_sub(n)
    } else {
        sum
    }
}

fn mul_mod_u64(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, n: u64) -> u64 {
    let mut acc = 1 % n;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, n);
        }
        base = mul_mod_u64(base, base, n);
        exp >>= 1;
    }
    acc
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES_64 {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    if n < 41 * 41 {
        return true;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_BASES_64 {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn rho_u64(n: u64, budget: &mut u64) -> Option<u64> {
    for c in 1.. {
        if *budget == 0 {
            return None;
        }
        if let Some(d) = brent_u64(n, c, budget) {
            return Some(d);
        }
    }
    unreachable!()
}

fn brent_u64(n: u64, c: u64, budget: &mut u64) -> Option<u64> {
    let step = |x: u64| add_mod_u64(mul_mod_u64(x, x, n), c % n, n);
    let mut y: u64 = 2;
    let mut r: u64 = 1;
    let mut q: u64 = 1;
    let mut x = y;
    let mut ys = y;
    let mut g: u64 = 1;
    while g == 1 {
        x = y;
        for _ in 0..r {
            if !spend(budget, COST_U64) {
                return None;
            }
            y = step(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            let lim = RHO_BATCH.min(r - k);
            for _ in 0..lim {
                if !spend(budget, COST_U64) {
                    return None;
                }
                y = step(y);
                q = mul_mod_u64(q, x.abs_diff(y), n);
            }
            g = q.gcd(&n);
            k += lim;
        }
        r <<= 1;
    }
    if g == n {
        // Rewind the last batch one step at a time to isolate the factor.
        g = 1;
        while g == 1 {
            ys = step(ys);
            g = x.abs_diff(ys).gcd(&n);
        }
    }
    (g != n).then_some(g)
}

// ---------------------------------------------------------------------------
// 128-bit arithmetic, Montgomery form (odd moduli below 2^126)
// ---------------------------------------------------------------------------

fn wide_mul(a: u128, b: u128) -> (u128, u128) {
    let (a1, a0) = ((a >> 64) as u64, a as u64);
    let (b1, b0) = ((b >> 64) as u64, b as u64);
    let p00 = a0 as u128 * b0 as u128;
    let p01 = a0 as u128 * b1 as u128;
    let p10 = a1 as u128 * b0 as u128;
    let p11 = a1 as u128 * b1 as u128;
    let (mid, mid_carry) = p01.overflowing_add(p10);
    let (lo, lo_carry) = p00.overflowing_add(mid << 64);
    let hi = p11 + (mid >> 64) + ((mid_carry as u128) << 64) + lo_carry as u128;
    (lo, hi)
}

fn add_mod_u128(a: u128, b: u128, n: u128) -> u128 {
    debug_assert!(a < n && b < n && n < FIXED_LIMIT);
    let sum = a + b;
    if sum >= n {
        sum - n
    } else {
        sum
    }
}

struct Mont128 {
    n: u128,
    neg_inv: u128,
    one: u128,
    r2: u128,
}

impl Mont128 {
    fn new(n: u128) -> Mont128 {
        debug_assert!(n % 2 == 1 && 1 < n && n < FIXED_LIMIT);
        // Newton doubling: for odd n the seed is right to three bits, and
        // each pass doubles the number of correct low bits (3 -> 192 > 128).
        let mut inv = n;
        for _ in 0..6 {
            inv = inv.wrapping_mul(2u128.wrapping_sub(n.wrapping_mul(inv)));
        }
        debug_assert!(n.wrapping_mul(inv) == 1);
        let one = u128::MAX % n + 1;
        let mut r2 = one;
        for _ in 0..128 {
            r2 = add_mod_u128(r2, r2, n);
        }
        Mont128 {
            n,
            neg_inv: inv.wrapping_neg(),
            one,
            r2,
        }
    }

    /// Montgomery reduction of a 256-bit value below `n * 2^128`.
    fn redc(&self, lo: u128, hi: u128) -> u128 {
        let m = lo.wrapping_mul(self.neg_inv);
        let (mn_lo, mn_hi) = wide_mul(m, self.n);
        let (low, carry) = lo.overflowing_add(mn_lo);
        debug_assert!(low == 0);
        let t = hi + mn_hi + carry as u128;
        if t >= self.n {
            t - self.n
        } else {
            t
        }
    }

    fn mul(&self, a: u128, b: u128) -> u128 {
        let (lo, hi) = wide_mul(a, b);
        self.redc(lo, hi)
    }

    fn enter(&self, x: u128) -> u128 {
        self.mul(x % self.n, self.r2)
    }

    fn pow(&self, base: u128, mut exp: u128) -> u128 {
        let mut acc = self.one;
        let mut base = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

fn is_prime_u128(n: u128) -> bool {
    if let Ok(n64) = u64::try_from(n) {
        return is_prime_u64(n64);
    }
    debug_assert!(n % 2 == 1);
    let mont = Mont128::new(n);
    let minus_one = n - mont.one;
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_BASES_WIDE {
        let mut x = mont.pow(mont.enter(a as u128), d);
        if x == mont.one || x == minus_one {
            continue;
        }
        for _ in 1..s {
            x = mont.mul(x, x);
            if x == minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn rho_u128(n: u128, budget: &mut u64) -> Option<u128> {
    let mont = Mont128::new(n);
    for c in 1u128.. {
        if *budget == 0 {
            return None;
        }
        if let Some(d) = brent_u128(&mont, mont.enter(c), budget) {
            return Some(d);
        }
    }
    unreachable!()
}

/// Brent rho entirely in Montgomery form: squaring commutes with the domain,
/// and gcds are unaffected because the Montgomery factor is a unit mod n.
fn brent_u128(mont: &Mont128, c: u128, budget: &mut u64) -> Option<u128> {
    let n = mont.n;
    let step = |x: u128| add_mod_u128(mont.mul(x, x), c, n);
    let mut y = mont.enter(2);
    let mut r: u64 = 1;
    let mut q = mont.one;
    let mut x = y;
    let mut ys = y;
    let mut g: u128 = 1;
    while g == 1 {
        x = y;
        for _ in 0..r {
            if !spend(budget, COST_U128) {
                return None;
            }
            y = step(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            let lim = RHO_BATCH.min(r - k);
            for _ in 0..lim {
                if !spend(budget, COST_U128) {
                    return None;
                }
                y = step(y);
                q = mont.mul(q, x.abs_diff(y));
            }
            g = q.gcd(&n);
            k += lim;
        }
        r <<= 1;
    }
    if g == n {
        g = 1;
        while g == 1 {
            ys = step(ys);
            g = x.abs_diff(ys).gcd(&n);
        }
    }
    (g != n).then_some(g)
}

// ---------------------------------------------------------------------------
// Arbitrary-precision fallback (n >= 2^126)
// ---------------------------------------------------------------------------

fn fits_fixed(n: &BigUint) -> Option<u128> {
    n.to_u128().filter(|&v| v < FIXED_LIMIT)
}

fn bump_big(out: &mut Vec<(BigUint, u32)>, p: BigUint, e: u32) {
    match out.iter_mut().find(|(q, _)| *q == p) {
        Some(entry) => entry.1 += e,
        None => out.push((p, e)),
    }
}

fn factor_big(n0: &BigUint, config: &FactorConfig) -> Result<Vec<(BigUint, u32)>> {
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    let mut n = n0.clone();
    let mut budget = config.rho_budget;
    let twos = n.trailing_zeros().unwrap_or(0);
    if twos > 0 {
        out.push((BigUint::from(2u32), twos as u32));
        n >>= twos;
    }
    let quick = config.trial_bound.min(QUICK_BOUND);
    for &p in quick_primes() {
        if u64::from(p) > quick || fits_fixed(&n).is_some() {
            break;
        }
        if p == 2 {
            continue;
        }
        while (&n % p).is_zero() {
            n = &n / p;
            bump_big(&mut out, BigUint::from(p), 1);
        }
    }
    if let Some(v) = fits_fixed(&n) {
        for (p, e) in factor_fixed_budget(v, config, &mut budget)? {
            bump_big(&mut out, BigUint::from(p), e);
        }
    } else if !n.is_one() {
        split_phase_big(n, config, quick, &mut budget, &mut out)?;
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

fn split_phase_big(
    n: BigUint,
    config: &FactorConfig,
    quick: u64,
    budget: &mut u64,
    out: &mut Vec<(BigUint, u32)>,
) -> Result<()> {
    let mut stack = vec![n];
    let mut stalled = Vec::new();
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if let Some(v) = fits_fixed(&m) {
            for (p, e) in factor_fixed_budget(v, config, budget)? {
                bump_big(out, BigUint::from(p), e);
            }
            continue;
        }
        if is_prime_big(&m) {
            bump_big(out, m, 1);
            continue;
        }
        match rho_big(&m, budget) {
            Some(d) => {
                stack.push(&m / &d);
                stack.push(d);
            }
            None => stalled.push(m),
        }
    }
    for m in stalled {
        trial_sweep_big(m, quick, config.trial_bound, out)?;
    }
    Ok(())
}

fn is_prime_big(n: &BigUint) -> bool {
    debug_assert!(n.is_odd() && fits_fixed(n).is_none());
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().expect("nonzero");
    let d = &nm1 >> s;
    'witness: for &a in &MR_BASES_WIDE {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn rho_big(n: &BigUint, budget: &mut u64) -> Option<BigUint> {
    for c in 1u64.. {
        if *budget == 0 {
            return None;
        }
        if let Some(d) = brent_big(n, c, budget) {
            return Some(d);
        }
    }
    unreachable!()
}

fn brent_big(n: &BigUint, c: u64, budget: &mut u64) -> Option<BigUint> {
    let c = BigUint::from(c);
    let step = |x: &BigUint| (x * x + &c) % n;
    let diff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    let mut y = BigUint::from(2u32);
    let mut r: u64 = 1;
    let mut q = BigUint::one();
    let mut x = y.clone();
    let mut ys = y.clone();
    let mut g = BigUint::one();
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            if !spend(budget, COST_BIG) {
                return None;
            }
            y = step(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            let lim = RHO_BATCH.min(r - k);
            for _ in 0..lim {
                if !spend(budget, COST_BIG) {
                    return None;
                }
                y = step(&y);
                q = q * diff(&x, &y) % n;
            }
            g = q.gcd(n);
            k += lim;
        }
        r <<= 1;
    }
    if g == *n {
        g = BigUint::one();
        while g.is_one() {
            ys = step(&ys);
            g = diff(&x, &ys).gcd(n);
        }
    }
    (g != *n).then_some(g)
}

fn trial_sweep_big(
    m: BigUint,
    from: u64,
    to: u64,
    out: &mut Vec<(BigUint, u32)>,
) -> Result<()> {
    let mut m = m;
    let mut d = (if from.is_multiple_of(2) { from + 1 } else { from + 2 }).max(3);
    while d <= to {
        if let Some(v) = fits_fixed(&m) {
            let mut fixed = Vec::new();
            trial_sweep(v, d - 2, to, &mut fixed)?;
            for (p, e) in fixed {
                bump_big(out, BigUint::from(p), e);
            }
            return Ok(());
        }
        while (&m % d).is_zero() {
            m = &m / d;
            bump_big(out, BigUint::from(d), 1);
        }
        d += 2;
    }
    if m.is_one() {
        return Ok(());
    }
    let prime = match fits_fixed(&m) {
        Some(v) => match u64::try_from(v) {
            Ok(v64) => is_prime_u64(v64),
            Err(_) => is_prime_u128(v),
        },
        None => is_prime_big(&m),
    };
    if prime {
        bump_big(out, m, 1);
        Ok(())
    } else {
        Err(Error::FactorizationLimitExceeded { cofactor: m })
    }
}
