use serde::Serialize;

use super::LinearExtension;
use crate::error::{Error, Result};
use crate::poset::{canon_labeling, Labeling, Poset};

/// Replaces each entry `j` of a permutation by `n + 1 - j`.
pub fn phi(sigma: &Labeling) -> Labeling {
    sigma.complement()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiImage {
    pub extension: LinearExtension,
    /// `phi(w) x phi(sigma)` on the same poset.
    pub labeling: Labeling,
}

impl PhiImage {
    pub fn word(&self) -> Vec<usize> {
        self.extension.word(&self.labeling)
    }
}

/// Carries an extension of `(Q, w x sigma)` to `(Q, phi(w) x phi(sigma))`.
///
/// The element order is unchanged; only the labels move, and every label
/// `v` becomes `mn + 1 - v`, so descents and ascents trade places.
pub fn phi_on_extension(
    q: &Poset,
    w: &Labeling,
    sigma: &Labeling,
    pi: &LinearExtension,
) -> Result<PhiImage> {
    let size = w.len() * sigma.len();
    if q.len() != size {
        return Err(Error::SizeMismatch { expected: size, found: q.len() });
    }
    if !super::is_linear_extension(q, pi.order()) {
        return Err(Error::NotLinearExtension(pi.order().to_vec()));
    }
    let labeling = canon_labeling(&phi(w), &phi(sigma));
    let complement = canon_labeling(w, sigma).complement();
    if labeling != complement {
        return Err(Error::InternalMismatch {
            what: "phi labeling".into(),
            lhs: format!("{:?}", labeling.values()),
            rhs: format!("{:?}", complement.values()),
        });
    }
    Ok(PhiImage { extension: pi.clone(), labeling })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limits::Limits;
    use crate::linext::{descent_count, enumerate_linear_extensions};
    use crate::perm::permutations;
    use crate::poset::{product_with_chain, remove_intercopy_covers, InterCopyEdge};

    fn perm(v: &[usize]) -> Labeling {
        Labeling::new(v.to_vec()).unwrap()
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&perm(&[1, 3, 4, 2])), perm(&[4, 2, 1, 3]));
        assert_eq!(phi(&Labeling::identity(5)), Labeling::reverse(5));
        for s in permutations(4) {
            assert_eq!(phi(&phi(&s)), s);
            assert_eq!(phi(&s).descents(), 3 - s.descents());
        }
    }

    #[test]
    fn extension_with_one_missing_cover() {
        let product = product_with_chain(&Poset::chain(2), 4);
        let q = remove_intercopy_covers(&product, 2, &[InterCopyEdge::new(2, 3)]).unwrap();
        assert_eq!(q.covers().len(), 9);
        let w = Labeling::identity(2);
        let sigma = perm(&[1, 3, 4, 2]);
        let labels = canon_labeling(&w, &sigma);
        let order = [1, 2, 5, 7, 6, 3, 4, 8].iter().map(|&v| labels.element_of(v)).collect();
        let pi = LinearExtension::new(&q, order).unwrap();
        let image = phi_on_extension(&q, &w, &sigma, &pi).unwrap();
        assert_eq!(image.word(), vec![8, 7, 4, 2, 3, 6, 5, 1]);
        assert_eq!(image.labeling, canon_labeling(&perm(&[2, 1]), &perm(&[4, 2, 1, 3])));
        // it is not an extension of the full product: (2,3) comes after (2,4)
        assert!(LinearExtension::new(&product, pi.order().to_vec()).is_err());
    }

    #[test]
    fn involution_and_complement_duality() {
        let (m, n) = (2, 3);
        let product = product_with_chain(&Poset::chain(m), n);
        let w = Labeling::identity(m);
        for edges in [vec![], vec![InterCopyEdge::new(1, 2)], InterCopyEdge::all(m, n)] {
            let q = remove_intercopy_covers(&product, m, &edges).unwrap();
            for sigma in permutations(n) {
                let labels = canon_labeling(&w, &sigma);
                for pi in enumerate_linear_extensions(&q, &Limits::default()).unwrap() {
                    let image = phi_on_extension(&q, &w, &sigma, &pi).unwrap();
                    let back = phi_on_extension(&q, &phi(&w), &phi(&sigma), &image.extension).unwrap();
                    assert_eq!(back.extension, pi);
                    assert_eq!(back.labeling, labels);
                    assert_eq!(
                        descent_count(&pi.word(&labels)) + descent_count(&image.word()),
                        m * n - 1
                    );
                }
            }
        }
    }

    #[test]
    fn rejects_malformed_input() {
        let q = product_with_chain(&Poset::chain(2), 2);
        let bad = LinearExtension { order: vec![1, 0, 2, 3] };
        assert!(phi_on_extension(&q, &Labeling::identity(2), &Labeling::identity(2), &bad).is_err());
        assert!(phi_on_extension(&q, &Labeling::identity(3), &Labeling::identity(2), &bad).is_err());
    }
}
