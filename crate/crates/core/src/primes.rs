use num_integer::Integer;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn is_odd_prime(n: u64) -> bool {
    n != 2 && is_prime(n)
}

/// Euler's totient.
pub fn totient(m: u64) -> u64 {
    (1..=m).filter(|&k| k.gcd(&m) == 1).count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes() {
        let p: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(p, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(!is_odd_prime(2));
        assert!(is_odd_prime(3));
        assert_eq!(totient(12), 4);
        assert_eq!(totient(7), 6);
    }
}
