//! Smith normal form of small integer matrices.

/// `left · input · right = diag(diagonal)` with `diagonal[k] | diagonal[k+1]`
/// and both transforms unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<i64>,
    pub left: Vec<Vec<i64>>,
    pub right: Vec<Vec<i64>>,
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn int_matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn int_det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

/// Computes the Smith normal form by alternating row and column reduction.
pub fn smith_normal_form(input: &[Vec<i64>]) -> SmithForm {
    let m = input.len();
    let n = input.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<i64>> = input.to_vec();
    let mut left = identity(m);
    let mut right = identity(n);

    for k in 0..m.min(n) {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let pivot = (k..m)
                .flat_map(|i| (k..n).map(move |j| (i, j)))
                .filter(|&(i, j)| a[i][j] != 0)
                .min_by_key(|&(i, j)| (a[i][j].abs(), i, j));
            let Some((pi, pj)) = pivot else {
                break;
            };
            a.swap(k, pi);
            left.swap(k, pi);
            for row in a.iter_mut() {
                row.swap(k, pj);
            }
            for row in right.iter_mut() {
                row.swap(k, pj);
            }

            let p = a[k][k];
            let mut clean = true;
            for i in k + 1..m {
                let q = a[i][k].div_euclid(p);
                if q != 0 {
                    for j in 0..n {
                        a[i][j] -= q * a[k][j];
                    }
                    for j in 0..m {
                        left[i][j] -= q * left[k][j];
                    }
                }
                clean &= a[i][k] == 0;
            }
            for j in k + 1..n {
                let q = a[k][j].div_euclid(p);
                if q != 0 {
                    for row in a.iter_mut() {
                        row[j] -= q * row[k];
                    }
                    for row in right.iter_mut() {
                        row[j] -= q * row[k];
                    }
                }
                clean &= a[k][j] == 0;
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into row k and retry
            let offender = (k + 1..m).find(|&i| (k + 1..n).any(|j| a[i][j] % p != 0));
            match offender {
                Some(i) => {
                    for j in 0..n {
                        a[k][j] += a[i][j];
                    }
                    for j in 0..m {
                        left[k][j] += left[i][j];
                    }
                }
                None => break,
            }
        }
        if a[k][k] < 0 {
            for j in 0..n {
                a[k][j] = -a[k][j];
            }
            for j in 0..m {
                left[k][j] = -left[k][j];
            }
        }
    }

    SmithForm {
        diagonal: (0..m.min(n)).map(|k| a[k][k]).collect(),
        left,
        right,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check(input: &[Vec<i64>]) -> SmithForm {
        let s = smith_normal_form(input);
        let prod = int_matmul(&int_matmul(&s.left, input), &s.right);
        for (i, row) in prod.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                let expected = if i == j { s.diagonal[i] } else { 0 };
                assert_eq!(v, expected, "reconstruction failed for {input:?}");
            }
        }
        for w in s.diagonal.windows(2) {
            assert!(w[0] >= 0);
            if w[0] == 0 {
                assert_eq!(w[1], 0);
            } else {
                assert_eq!(w[1] % w[0], 0);
            }
        }
        assert_eq!(int_det(&s.left).abs(), 1);
        assert_eq!(int_det(&s.right).abs(), 1);
        s
    }

    #[test]
    fn examples() {
        assert_eq!(check(&[vec![2]]).diagonal, vec![2]);
        assert_eq!(check(&[vec![2, -1], vec![-1, 2]]).diagonal, vec![1, 3]);
        assert_eq!(check(&identity(3)).diagonal, vec![1, 1, 1]);
    }

    #[test]
    fn d4_cartan() {
        let d4 = vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -1, -1],
            vec![0, -1, 2, 0],
            vec![0, -1, 0, 2],
        ];
        assert_eq!(check(&d4).diagonal, vec![1, 1, 2, 2]);
    }

    #[test]
    fn needs_divisibility_fix() {
        assert_eq!(check(&[vec![2, 0], vec![0, 3]]).diagonal, vec![1, 6]);
        assert_eq!(check(&[vec![0, 0], vec![0, 0]]).diagonal, vec![0, 0]);
    }

    #[test]
    fn determinant() {
        assert_eq!(int_det(&[vec![2, -1], vec![-1, 2]]), 3);
        assert_eq!(int_det(&[vec![0, 1], vec![1, 0]]), -1);
    }

    proptest! {
        #[test]
        fn reconstruction_and_chain(
            rows in 1usize..=4,
            cols in 1usize..=4,
            vals in prop::collection::vec(-9i64..=9, 16)
        ) {
            let m: Vec<Vec<i64>> = (0..rows).map(|i| vals[i * 4..i * 4 + cols].to_vec()).collect();
            check(&m);
        }
    }
}
