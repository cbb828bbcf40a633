//! Word-sized prime utilities: a segmented sieve for ascending scans and a
//! deterministic Miller–Rabin test.

const SEGMENT: u64 = 1 << 15;

/// Witnesses that make Miller–Rabin deterministic for every `u64`.
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn small_sieve(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; limit as usize + 1];
    let mut out = Vec::new();
    for i in 2..=limit as usize {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= limit as usize {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Ascending iterator over the primes `<= limit`, sieving one fixed-size
/// segment at a time.
#[derive(Debug, Clone)]
pub struct SegmentedPrimes {
    limit: u64,
    base: Vec<u64>,
    low: u64,
    segment: Vec<bool>,
    cursor: usize,
    done: bool,
}

impl SegmentedPrimes {
    pub fn new(limit: u64) -> Self {
        let base = small_sieve(limit.isqrt());
        let mut it = SegmentedPrimes {
            limit,
            base,
            low: 0,
            segment: Vec::new(),
            cursor: 0,
            done: limit < 2,
        };
        if !it.done {
            it.fill();
        }
        it
    }

    fn fill(&mut self) {
        let low = self.low;
        let high = (low + SEGMENT - 1).min(self.limit);
        self.segment.clear();
        self.segment.resize((high - low + 1) as usize, true);
        for v in low..=high.min(1) {
            self.segment[(v - low) as usize] = false;
        }
        for &p in &self.base {
            if p * p > high {
                break;
            }
            let mut m = (p * p).max(low.div_ceil(p) * p);
            while m <= high {
                self.segment[(m - low) as usize] = false;
                m += p;
            }
        }
        self.cursor = 0;
    }
}

impl Iterator for SegmentedPrimes {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        while !self.done {
            while self.cursor < self.segment.len() {
                let i = self.cursor;
                self.cursor += 1;
                if self.segment[i] {
                    return Some(self.low + i as u64);
                }
            }
            match self.low.checked_add(SEGMENT) {
                Some(next) if next <= self.limit => {
                    self.low = next;
                    self.fill();
                }
                _ => self.done = true,
            }
        }
        None
    }
}

/// All primes `<= limit` in ascending order.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    SegmentedPrimes::new(limit).collect()
}
