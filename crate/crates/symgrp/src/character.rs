//! Irreducible characters of `S_n`, decompositions of representations and
//! Schur functor dimensions.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use ratlin::{RatMatrix, SparseVec, Q};

use crate::partition::Partition;
use crate::perm::Perm;
use crate::SymError;

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |a, k| a * BigInt::from(k))
}

/// `z_μ = ∏ k^{m_k} m_k!`, the centralizer order of a permutation of type `μ`.
pub fn centralizer_order(mu: &Partition) -> BigInt {
    let mut z = BigInt::from(1);
    for (k, &m) in mu.multiplicities().iter().enumerate().skip(1) {
        z *= BigInt::from(k).pow(m as u32) * factorial(m);
    }
    z
}

/// Number of permutations with cycle type `μ`.
pub fn class_size(mu: &Partition) -> BigInt {
    factorial(mu.size()) / centralizer_order(mu)
}

fn beta_to_partition(beta: &[usize]) -> Vec<usize> {
    let mut b = beta.to_vec();
    b.sort_unstable_by(|a, c| c.cmp(a));
    let l = b.len();
    b.iter().enumerate().map(|(i, &x)| x - (l - 1 - i)).filter(|&p| p > 0).collect()
}

fn mn_rec(lambda: Vec<usize>, mu: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>) -> i64 {
    if mu.is_empty() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    let key = (lambda.clone(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let k = mu[0];
    let l = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + (l - 1 - i)).collect();
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - k && x < b).count();
        let mut nb = beta.clone();
        nb[idx] = b - k;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(beta_to_partition(&nb), &mu[1..], memo);
    }
    memo.insert(key, total);
    total
}

/// `χ^λ(μ)` by the Murnaghan–Nakayama rule.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> i64 {
    type Memo = Mutex<Option<HashMap<(Vec<usize>, Vec<usize>), i64>>>;
    static MEMO: Memo = Mutex::new(None);
    if lambda.size() != mu.size() {
        return 0;
    }
    let mut guard = MEMO.lock().unwrap();
    let memo = guard.get_or_insert_with(HashMap::new);
    mn_rec(lambda.parts().to_vec(), mu.parts(), memo)
}

/// `dim S_λ` (the Specht module) by the hook length formula.
pub fn specht_dim(lambda: &Partition) -> u64 {
    let mut hooks = BigInt::from(1);
    for (i, j) in lambda.boxes() {
        hooks *= BigInt::from(lambda.hook(i, j));
    }
    (factorial(lambda.size()) / hooks).to_u64().expect("fits u64")
}

/// `dim S^λ(K^n)` by the hook-content formula; zero when `l(λ) > n`.
pub fn schur_dim(lambda: &Partition, n: usize) -> u64 {
    if lambda.len() > n {
        return 0;
    }
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for (i, j) in lambda.boxes() {
        num *= BigInt::from(n + j - i);
        den *= BigInt::from(lambda.hook(i, j));
    }
    (num / den).to_u64().expect("fits u64")
}

/// The constituents `{2λ : λ ⊢ d}` of the plethysm `S^d ∘ S^2`.
pub fn even_plethysm_parts(d: usize) -> Vec<Partition> {
    Partition::all(d).iter().map(|l| l.doubled()).collect()
}

/// Character of `S^λ(K^n)` restricted to the permutation matrices, at a
/// permutation of cycle type `μ ⊢ n`:
/// `Σ_{ν ⊢ |λ|} χ^λ(ν)/z_ν ∏_i p_{ν_i}(σ)`, where `p_k(σ)` counts fixed
/// points of `σ^k`.
pub fn restricted_schur_character(lambda: &Partition, mu: &Partition) -> Q {
    let m = mu.multiplicities();
    let fixed = |k: usize| -> i64 { (1..m.len()).filter(|l| k.is_multiple_of(*l)).map(|l| (l * m[l]) as i64).sum() };
    let mut total = Q::zero();
    for nu in Partition::all(lambda.size()) {
        let chi = mn_character(lambda, &nu);
        if chi == 0 {
            continue;
        }
        let prod: i64 = nu.parts().iter().map(|&k| fixed(k)).product();
        if prod == 0 {
            continue;
        }
        total += &(Q::from_int(chi * prod) / Q::from(centralizer_order(&nu)));
    }
    total
}

/// Decomposes a class function given by its values on each cycle type of
/// `S_n` into irreducible multiplicities.
pub fn decompose_character(n: usize, values: &BTreeMap<Partition, Q>) -> Result<BTreeMap<Partition, usize>, SymError> {
    let classes = Partition::all(n);
    let mut out = BTreeMap::new();
    for lambda in &classes {
        let mut ip = Q::zero();
        for mu in &classes {
            let v = values.get(mu).ok_or_else(|| SymError::MissingClass(mu.to_string()))?;
            let chi = mn_character(lambda, mu);
            if chi != 0 && !v.is_zero() {
                ip += &(&(v * &Q::from_int(chi)) / &Q::from(centralizer_order(mu)));
            }
        }
        match ip.to_i64() {
            Some(k) if k >= 0 => {
                if k > 0 {
                    out.insert(lambda.clone(), k as usize);
                }
            }
            _ => return Err(SymError::NotACharacter(ip.to_string())),
        }
    }
    Ok(out)
}

fn apply_word(gens: &[RatMatrix], word: &[usize], v: &SparseVec) -> SparseVec {
    // σ = s_{w0} ∘ s_{w1} ∘ …, so the rightmost generator acts first.
    let mut x = v.clone();
    for &i in word.iter().rev() {
        x = gens[i].mul_vec(&x);
    }
    x
}

/// Irreducible multiplicities of a representation of `S_n` given by the
/// matrices of the adjacent transpositions `(i, i+1)`, `i = 1..n−1`.
pub fn decompose_sn_rep(gens: &[RatMatrix], n: usize) -> Result<BTreeMap<Partition, usize>, SymError> {
    if gens.len() != n.saturating_sub(1) {
        return Err(SymError::BadRepresentation(format!("expected {} generators, got {}", n.saturating_sub(1), gens.len())));
    }
    let dim = gens.first().map(|g| g.rows()).unwrap_or(1);
    let eye = RatMatrix::identity(dim);
    for (i, g) in gens.iter().enumerate() {
        if g.rows() != dim || g.cols() != dim {
            return Err(SymError::BadRepresentation("generator is not a square matrix of the common size".into()));
        }
        if g.mul(g).map_err(|e| SymError::BadRepresentation(e.to_string()))? != eye {
            return Err(SymError::BadRepresentation(format!("s_{} is not an involution", i + 1)));
        }
        if i + 1 < gens.len() {
            let h = &gens[i + 1];
            let lhs = g.mul(h).and_then(|x| x.mul(g)).unwrap();
            let rhs = h.mul(g).and_then(|x| x.mul(h)).unwrap();
            if lhs != rhs {
                return Err(SymError::BadRepresentation(format!("braid relation fails at s_{}", i + 1)));
            }
        }
        for h in gens.iter().skip(i + 2) {
            if g.mul(h).unwrap() != h.mul(g).unwrap() {
                return Err(SymError::BadRepresentation(format!("far commutation fails at s_{}", i + 1)));
            }
        }
    }
    let mut values = BTreeMap::new();
    for mu in Partition::all(n) {
        let word = Perm::class_representative(&mu).adjacent_word();
        let mut tr = Q::zero();
        for b in 0..dim {
            tr += &apply_word(gens, &word, &SparseVec::unit(b)).get(b);
        }
        values.insert(mu, tr);
    }
    decompose_character(n, &values)
}

/// Multiplicities of the irreducibles of `S_n` in `S^λ(K^n)`.
pub fn schur_restriction(lambda: &Partition, n: usize) -> BTreeMap<Partition, usize> {
    let values: BTreeMap<Partition, Q> =
        Partition::all(n).into_iter().map(|mu| (mu.clone(), restricted_schur_character(lambda, &mu))).collect();
    decompose_character(n, &values).expect("restriction of a polynomial representation is a character")
}

/// Checks `Σ_λ (dim S_λ)² = d!`.
pub fn sum_of_squares_identity(d: usize) -> bool {
    let s: BigInt = Partition::all(d).iter().map(|l| BigInt::from(specht_dim(l)).pow(2)).sum();
    s == factorial(d) && !s.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn character_table_of_s3() {
        // Rows (3), (2,1), (1,1,1); columns (1,1,1), (2,1), (3).
        let cols = [p("(1,1,1)"), p("(2,1)"), p("(3)")];
        let table = [[1, 1, 1], [2, 0, -1], [1, -1, 1]];
        for (l, row) in [p("(3)"), p("(2,1)"), p("(1,1,1)")].iter().zip(table) {
            for (mu, v) in cols.iter().zip(row) {
                assert_eq!(mn_character(l, mu), v, "{l} {mu}");
            }
        }
    }

    #[test]
    fn schur_dims() {
        assert_eq!(schur_dim(&p("(1,1,1)"), 2), 0);
        assert_eq!(schur_dim(&p("(4)"), 2), 5);
        assert_eq!(schur_dim(&p("(2,2)"), 2), 1);
        assert_eq!(schur_dim(&p("(2,1)"), 3), 8);
    }

    #[test]
    fn plethysm_parts() {
        let names = |d| even_plethysm_parts(d).iter().map(|x| x.to_string()).collect::<Vec<_>>();
        assert_eq!(names(1), vec!["(2)"]);
        assert_eq!(names(2), vec!["(4)", "(2,2)"]);
        assert_eq!(names(3), vec!["(6)", "(4,2)", "(2,2,2)"]);
    }

    #[test]
    fn restricted_character_at_identity_is_dimension() {
        for l in [p("(2)"), p("(2,1)"), p("(3,1)")] {
            for n in 1..6 {
                let id = Partition::new(vec![1; n]).unwrap();
                assert_eq!(restricted_schur_character(&l, &id), Q::from(schur_dim(&l, n) as usize));
            }
        }
    }

    #[test]
    fn symmetric_square_restriction() {
        // S²(K^n) as a permutation module is K[pairs with repetition].
        let m = schur_restriction(&p("(2)"), 3);
        let expect: BTreeMap<Partition, usize> = [(p("(3)"), 2), (p("(2,1)"), 2)].into_iter().collect();
        assert_eq!(m, expect);
    }
}
