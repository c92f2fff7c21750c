//! Small dense integer matrices.

pub type Mat = Vec<Vec<i64>>;

pub fn identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

pub fn transpose(a: &Mat) -> Mat {
    let n = a.len();
    if n == 0 {
        return Vec::new();
    }
    (0..a[0].len()).map(|j| (0..n).map(|i| a[i][j]).collect()).collect()
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut c = vec![vec![0; m]; n];
    for i in 0..n {
        for l in 0..k {
            let x = a[i][l];
            if x == 0 {
                continue;
            }
            for j in 0..m {
                c[i][j] += x * b[l][j];
            }
        }
    }
    c
}

pub fn mat_vec(a: &Mat, v: &[i64]) -> Vec<i64> {
    a.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Inverse of a nonsingular integer matrix as `(adj, det)` with `A^{-1} = adj / det`
/// and `det > 0` (signs are moved into `adj`).
pub fn inverse(a: &Mat) -> (Mat, i64) {
    let n = a.len();
    // Gauss-Jordan over rationals (num, den) with i128.
    let mut m: Vec<Vec<(i128, i128)>> = (0..n)
        .map(|i| {
            let mut row: Vec<(i128, i128)> = a[i].iter().map(|&x| (x as i128, 1)).collect();
            row.extend((0..n).map(|j| (i128::from(i == j), 1)));
            row
        })
        .collect();
    let norm = |(p, q): (i128, i128)| -> (i128, i128) {
        if p == 0 {
            return (0, 1);
        }
        let g = gcd(p, q);
        let (p, q) = (p / g, q / g);
        if q < 0 {
            (-p, -q)
        } else {
            (p, q)
        }
    };
    for col in 0..n {
        let piv = (col..n).find(|&r| m[r][col].0 != 0).expect("singular matrix");
        m.swap(col, piv);
        let (pn, pd) = m[col][col];
        for x in m[col].iter_mut() {
            *x = norm((x.0 * pd, x.1 * pn));
        }
        for r in 0..n {
            if r == col || m[r][col].0 == 0 {
                continue;
            }
            let f = m[r][col];
            for c in 0..2 * n {
                let s = m[col][c];
                let t = m[r][c];
                m[r][c] = norm((t.0 * f.1 * s.1 - f.0 * s.0 * t.1, t.1 * f.1 * s.1));
            }
        }
    }
    let mut den: i128 = 1;
    for row in &m {
        for x in &row[n..] {
            den = den / gcd(den, x.1) * x.1;
        }
    }
    let adj = m
        .iter()
        .map(|row| row[n..].iter().map(|x| (x.0 * (den / x.1)) as i64).collect())
        .collect();
    (adj, den as i64)
}

/// Exact integer solution of `A x = b`, if one exists.
pub fn solve_integral(adj: &Mat, det: i64, b: &[i64]) -> Option<Vec<i64>> {
    let y = mat_vec(adj, b);
    y.iter().map(|&v| if v % det == 0 { Some(v / det) } else { None }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roundtrip() {
        let a = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]];
        let (adj, det) = inverse(&a);
        assert_eq!(det, 4);
        let p = mat_mul(&a, &adj);
        assert_eq!(p, (0..3).map(|i| (0..3).map(|j| if i == j { 4 } else { 0 }).collect()).collect::<Mat>());
    }
}
