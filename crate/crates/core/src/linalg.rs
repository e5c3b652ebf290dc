/// Rank of a square integer matrix (row-major, destroyed in place) by
/// fraction-free elimination.
pub(crate) fn integer_rank(m: &mut [i128], n: usize) -> usize {
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..n).find(|&r| m[r * n + col] != 0) else {
            continue;
        };
        for c in 0..n {
            m.swap(pivot * n + c, rank * n + c);
        }
        let p = m[rank * n + col];
        for r in (rank + 1)..n {
            let f = m[r * n + col];
            if f == 0 {
                continue;
            }
            for c in 0..n {
                m[r * n + c] = m[r * n + c] * p - m[rank * n + c] * f;
            }
            let g = (0..n).fold(0i128, |g, c| gcd(g, m[r * n + c]));
            if g > 1 {
                for c in 0..n {
                    m[r * n + c] /= g;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks() {
        let mut zero = [0i128; 9];
        assert_eq!(integer_rank(&mut zero, 3), 0);
        let mut id = [1, 0, 0, 0, 1, 0, 0, 0, 1i128];
        assert_eq!(integer_rank(&mut id, 3), 3);
        let mut one = [2, 4, 6, 1, 2, 3, -3, -6, -9i128];
        assert_eq!(integer_rank(&mut one, 3), 1);
        let mut two = [1, 2, 3, 4, 5, 6, 7, 8, 9i128];
        assert_eq!(integer_rank(&mut two, 3), 2);
    }
}
