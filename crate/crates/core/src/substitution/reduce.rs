//! Telescoping reduction of the gluing sum at one circle.
//!
//! Gluing `k` edges to a wheel of order `n` in a fixed cyclic order gives
//! `n · h_{n-k}(x_1, ..., x_k)`, `h` the complete homogeneous symmetric
//! polynomial in the arc classes. For two distinct classes `u != v`,
//!
//! `h_m(X) = (h_{m+1}(X - v) - h_{m+1}(X - u)) / (u - v)`,
//!
//! and with a single class of multiplicity `j`,
//! `h_m(y, ..., y) = binom(m + j - 1, j - 1) y^m`.
//! After `p` steps the exponent is `n - k + p` and the binomial
//! `binom(n - 1, j - 1)` with `j = k - p`.

use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

use crate::rational::{self, int, Q};

use super::resolve::Class;

/// One term of the reduced gluing sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fragment {
    #[serde(serialize_with = "ser_q")]
    pub coefficient: Q,
    /// The common residual class `y`.
    pub class: Class,
    /// Number of arcs still carrying `y`.
    pub multiplicity: usize,
    /// Linear denominators `u - v`.
    pub denominators: Vec<Class>,
    pub valence: usize,
}

fn ser_q<S: serde::Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rational::to_text(x))
}

fn apply(point: &[Q], c: &[i64]) -> Q {
    c.iter().zip(point).fold(Q::zero(), |acc, (&a, z)| acc + int(a) * z)
}

impl Fragment {
    /// Number of linear denominators.
    pub fn p(&self) -> usize {
        self.denominators.len()
    }

    /// Exponent of `y` at wheel order `n`.
    pub fn exponent(&self, n: usize) -> i64 {
        n as i64 - self.valence as i64 + self.p() as i64
    }

    /// `n · binom(n - 1, j - 1)` times the coefficient: the weight of
    /// `y^{n-k+p} / D` at wheel order `n`.
    pub fn weight(&self, n: usize) -> Q {
        let b = rational::binomial(n as i64 - 1, self.multiplicity as i64 - 1);
        &self.coefficient * Q::from_integer(b) * int(n as i64)
    }

    /// Value at wheel order `n` with classes evaluated at `point`.
    pub fn evaluate(&self, n: usize, point: &[Q]) -> Q {
        let den = self.denominators.iter().fold(Q::one(), |acc, d| acc * apply(point, d));
        self.weight(n) * rational::pow(&apply(point, &self.class), self.exponent(n)) / den
    }
}

struct Pending {
    coefficient: Q,
    classes: Vec<Class>,
    denominators: Vec<Class>,
}

fn distinct(classes: &[Class]) -> Vec<Class> {
    let mut d = classes.to_vec();
    d.sort();
    d.dedup();
    d
}

fn remove_one(classes: &[Class], c: &Class) -> Vec<Class> {
    let mut out = classes.to_vec();
    let i = out.iter().position(|x| x == c).expect("class present");
    out.remove(i);
    out
}

/// Reduction with a caller-chosen pair at every step. `choose` gets the
/// sorted distinct classes (at least two) and returns two distinct indices.
pub fn reduce_term_with(classes: &[Class], choose: &mut dyn FnMut(&[Class]) -> (usize, usize)) -> Vec<Fragment> {
    assert!(!classes.is_empty(), "reduction needs at least one edge");
    let k = classes.len();
    let mut out = Vec::new();
    let mut todo = vec![Pending {
        coefficient: Q::one(),
        classes: classes.to_vec(),
        denominators: vec![],
    }];
    while let Some(t) = todo.pop() {
        let d = distinct(&t.classes);
        if d.len() == 1 {
            out.push(Fragment {
                coefficient: t.coefficient,
                class: d[0].clone(),
                multiplicity: t.classes.len(),
                denominators: t.denominators,
                valence: k,
            });
            continue;
        }
        let (i, j) = choose(&d);
        assert!(i != j && i < d.len() && j < d.len(), "invalid reduction pair");
        let (u, v) = (&d[i], &d[j]);
        let diff: Class = u.iter().zip(v).map(|(a, b)| a - b).collect();
        let mut dens = t.denominators.clone();
        dens.push(diff);
        todo.push(Pending {
            coefficient: t.coefficient.clone(),
            classes: remove_one(&t.classes, v),
            denominators: dens.clone(),
        });
        todo.push(Pending {
            coefficient: -t.coefficient,
            classes: remove_one(&t.classes, u),
            denominators: dens,
        });
    }
    out.sort_by(|a, b| (&a.class, &a.denominators).cmp(&(&b.class, &b.denominators)));
    out
}

/// Reduction always using the lexicographically least pair of distinct
/// classes.
pub fn reduce_term(classes: &[Class]) -> Vec<Fragment> {
    reduce_term_with(classes, &mut |_| (0, 1))
}

/// Reduction with pairs drawn from `rng`.
pub fn reduce_term_random(classes: &[Class], rng: &mut impl Rng) -> Vec<Fragment> {
    reduce_term_with(classes, &mut |d| {
        let i = rng.gen_range(0..d.len());
        let j = (i + rng.gen_range(1..d.len())) % d.len();
        (i, j)
    })
}

/// `n · h_{n-k}` of the classes evaluated at `point`, by direct summation.
pub fn gluing_sum(classes: &[Class], n: usize, point: &[Q]) -> Q {
    let k = classes.len();
    if n < k {
        return Q::zero();
    }
    let m = n - k;
    // h[d] = h_d of the values seen so far
    let mut h = vec![Q::zero(); m + 1];
    h[0] = Q::one();
    for c in classes {
        let x = apply(point, c);
        for d in 1..=m {
            let prev = h[d - 1].clone();
            h[d] += &x * prev;
        }
    }
    int(n as i64) * &h[m]
}

/// Sum of fragment values.
pub fn evaluate_fragments(fragments: &[Fragment], n: usize, point: &[Q]) -> Q {
    fragments.iter().fold(Q::zero(), |acc, f| acc + f.evaluate(n, point))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn point(r: usize) -> Vec<Q> {
        (0..r).map(|i| rational::frac(3 * i as i64 + 2, 7 + i as i64)).collect()
    }

    #[test]
    fn equal_classes() {
        let f = reduce_term(&[vec![1, 0], vec![1, 0], vec![1, 0]]);
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].p(), 0);
        assert_eq!(f[0].weight(5), int(5 * 6)); // 5 · binom(4, 2)
    }

    #[test]
    fn valence_one() {
        let f = reduce_term(&[vec![0, 1]]);
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].p(), 0);
        assert_eq!(f[0].weight(7), int(7));
    }

    #[test]
    fn two_distinct() {
        let f = reduce_term(&[vec![1, 0], vec![0, 1]]);
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|x| x.p() == 1));
        for n in 2..8 {
            let pt = point(2);
            assert_eq!(evaluate_fragments(&f, n, &pt), gluing_sum(&[vec![1, 0], vec![0, 1]], n, &pt));
        }
    }

    #[test]
    fn random_order_agrees() {
        let classes = vec![vec![1, 0, 0], vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]];
        let det = reduce_term(&classes);
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..5 {
            let rnd = reduce_term_random(&classes, &mut rng);
            for n in 4..10 {
                let pt = point(3);
                assert_eq!(evaluate_fragments(&det, n, &pt), evaluate_fragments(&rnd, n, &pt));
                assert_eq!(evaluate_fragments(&det, n, &pt), gluing_sum(&classes, n, &pt));
            }
        }
    }
}
