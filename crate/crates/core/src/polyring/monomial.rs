use num_integer::binomial;

/// Exponent vector of a monomial in n+1 variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }
}

/// C(d + n, n), the dimension of the degree-d piece in n+1 variables.
pub fn num_monomials(n: usize, d: usize) -> usize {
    binomial(d + n, n)
}

/// All degree-d monomials in n+1 variables, graded-lexicographic order
/// (the exponent of the first variable decreasing first).
pub fn monomial_basis(n: usize, d: usize) -> Vec<MultiIndex> {
    exponent_table(n, d).into_iter().map(MultiIndex).collect()
}

pub(crate) fn exponent_table(n: usize, d: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::with_capacity(num_monomials(n, d));
    let mut cur = vec![0u32; n + 1];
    fill(&mut cur, 0, d as u32, &mut out);
    out
}

fn fill(cur: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Vec<u32>>) {
    if pos + 1 == cur.len() {
        cur[pos] = remaining;
        out.push(cur.clone());
        return;
    }
    for e in (0..=remaining).rev() {
        cur[pos] = e;
        fill(cur, pos + 1, remaining - e, out);
    }
}

/// Position of an exponent vector in [`monomial_basis`] of its own degree.
///
/// At each position, the monomials sharing the prefix but with a larger
/// exponent there are the monomials of degree < r - e in the remaining
/// variables.
pub fn monomial_index(exps: &[u32]) -> usize {
    let n = exps.len() - 1;
    let mut remaining: usize = exps.iter().map(|&e| e as usize).sum();
    let mut idx = 0;
    for (i, &e) in exps[..n].iter().enumerate() {
        let e = e as usize;
        let vars_after = n - i;
        if remaining > e {
            idx += binomial(remaining - e - 1 + vars_after, vars_after);
        }
        remaining -= e;
    }
    idx
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bases() {
        let b: Vec<_> = monomial_basis(1, 2).into_iter().map(MultiIndex::into_inner).collect();
        assert_eq!(b, vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        let b: Vec<_> = monomial_basis(2, 1).into_iter().map(MultiIndex::into_inner).collect();
        assert_eq!(b, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(monomial_basis(2, 3).len(), 10);
        assert_eq!(monomial_basis(0, 4), vec![MultiIndex::new(vec![4])]);
        assert_eq!(monomial_basis(3, 0), vec![MultiIndex::new(vec![0; 4])]);
    }

    #[test]
    fn index_inverts_basis() {
        for n in 0..5 {
            for d in 0..7 {
                let basis = monomial_basis(n, d);
                assert_eq!(basis.len(), num_monomials(n, d));
                for (i, m) in basis.iter().enumerate() {
                    assert_eq!(monomial_index(m.exponents()), i);
                    assert_eq!(m.degree(), d);
                }
                let mut sorted = basis.clone();
                sorted.sort_by(|a, b| b.cmp(a));
                assert_eq!(sorted, basis);
            }
        }
    }
}
