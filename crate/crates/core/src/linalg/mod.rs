//! Exact sparse linear algebra over a [`Field`](crate::scalars::Field).

mod echelon;
mod matrix;
mod subspace;
pub mod svec;

pub use echelon::Echelon;
pub use matrix::{commutator, q_bracket, SparseMat};
pub use subspace::{Subspace, SubspaceRepr};
pub use svec::SVec;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::RatFunc;

    fn m(rows: &[&[i64]]) -> SparseMat<RatFunc> {
        let n = rows[0].len();
        SparseMat::from_triplets(
            rows.len(),
            n,
            rows.iter().enumerate().flat_map(|(i, r)| {
                r.iter().enumerate().map(move |(j, &x)| (i, j, RatFunc::from_int(x)))
            }),
        )
        .unwrap()
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1, 0], &[0, 1, 3], &[1, 0, 1]]);
        let ai = a.inverse().unwrap();
        assert!(a.mul(&ai).is_identity());
        assert!(ai.mul(&a).is_identity());
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_err());
    }

    #[test]
    fn kron_indexing() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        let k = a.kron(&b);
        assert_eq!(k.get(0, 1), RatFunc::from_int(1));
        assert_eq!(k.get(3, 2), RatFunc::from_int(4));
        assert_eq!(k.get(1, 2), RatFunc::from_int(2));
        assert_eq!(k.get(1, 3), RatFunc::zero());
    }

    #[test]
    fn nullspace_and_intersection() {
        let mut e = Echelon::new(3);
        e.insert(vec![(0, RatFunc::from_int(1)), (1, RatFunc::from_int(1))]);
        let ns = e.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(svec::dot(&vec![(0, RatFunc::from_int(1)), (1, RatFunc::from_int(1))], v).is_zero());
        }
        let u: Subspace<RatFunc> = Subspace::span(3, vec![svec::unit(0), svec::unit(1)]);
        let w = Subspace::span(3, vec![svec::unit(1), svec::unit(2)]);
        assert_eq!(u.intersect(&w), Subspace::span(3, vec![svec::unit(1)]));
        assert_eq!(u.sum(&w), Subspace::full(3));
    }

    #[test]
    fn canonical_subspaces() {
        let a = Subspace::span(2, vec![vec![(0, RatFunc::from_int(2)), (1, RatFunc::from_int(4))]]);
        let b = Subspace::span(2, vec![vec![(0, RatFunc::from_int(-1)), (1, RatFunc::from_int(-2))]]);
        assert_eq!(a, b);
    }
}
