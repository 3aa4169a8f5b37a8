use super::{Poly, PolyError};

/// Determinant of a square matrix of polynomials by cofactor expansion
/// along the first row.
pub fn determinant(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    assert!(n > 0 && m.iter().all(|r| r.len() == n), "square matrix");
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = m[0][0].ring().zero();
    for (j, head) in m[0].iter().enumerate() {
        if head.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let t = head * &determinant(&minor);
        acc = if j % 2 == 0 { &acc + &t } else { &acc - &t };
    }
    acc
}

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, r, &mut Vec::new(), &mut out);
    out
}

/// All `r × r` minors of the Jacobian `(∂f_i/∂x_j)`, rows and columns
/// chosen in lexicographic order. Zero minors are included.
pub fn jacobian_minors(gens: &[Poly], r: usize) -> Result<Vec<Poly>, PolyError> {
    let n = gens.first().map_or(0, |g| g.ring().nvars());
    if r == 0 || r > gens.len().min(n) {
        return Err(PolyError::MinorOutOfRange(r));
    }
    let jac: Vec<Vec<Poly>> = gens
        .iter()
        .map(|f| (0..n).map(|j| f.derivative(j)).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()?;
    let mut out = Vec::new();
    for rows in subsets(gens.len(), r) {
        for cols in subsets(n, r) {
            let sub: Vec<Vec<Poly>> = rows
                .iter()
                .map(|&i| cols.iter().map(|&j| jac[i][j].clone()).collect())
                .collect();
            out.push(determinant(&sub));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::{parse_poly, MonomialOrder, PolyRing};
    use crate::numberfield::NumberField;

    #[test]
    fn minors() {
        let r = PolyRing::new(&NumberField::rationals(), &["x", "y"], MonomialOrder::DegRevLex);
        let p = |s: &str| parse_poly(&r, s).unwrap();
        assert_eq!(jacobian_minors(&[p("x^2+y^2-1")], 1).unwrap(), vec![p("2*x"), p("2*y")]);
        assert_eq!(jacobian_minors(&[p("x*y-1"), p("x+y")], 2).unwrap(), vec![p("y-x")]);
        assert_eq!(jacobian_minors(&[p("x")], 2).unwrap_err(), PolyError::MinorOutOfRange(2));
        assert_eq!(jacobian_minors(&[p("x")], 0).unwrap_err(), PolyError::MinorOutOfRange(0));
    }

    #[test]
    fn three_by_three() {
        let r = PolyRing::new(&NumberField::rationals(), &["x"], MonomialOrder::Lex);
        let c = |n: i64| parse_poly(&r, &n.to_string()).unwrap();
        let m = vec![
            vec![c(2), c(0), c(1)],
            vec![c(1), c(3), c(2)],
            vec![c(1), c(1), c(1)],
        ];
        // 2(3-2) - 0 + 1(1-3) = 0
        assert!(determinant(&m).is_zero());
        let m = vec![
            vec![c(2), c(0), c(1)],
            vec![c(1), c(3), c(2)],
            vec![c(1), c(1), c(4)],
        ];
        assert_eq!(determinant(&m), c(18));
    }
}
