//! Conjugacy classes and power maps.

use super::FiniteGroup;

#[derive(Clone, Debug)]
pub struct ConjClasses {
    reps: Vec<usize>,
    sizes: Vec<usize>,
    class_of: Vec<usize>,
    members: Vec<Vec<usize>>,
    inverse_class: Vec<usize>,
}

impl ConjClasses {
    pub(crate) fn compute(group: &FiniteGroup) -> ConjClasses {
        let n = group.order();
        let mut class_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        let mut members: Vec<Vec<usize>> = Vec::new();

        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(x);
            class_of[x] = id;
            let mut orbit = vec![x];
            let mut cursor = 0;
            while cursor < orbit.len() {
                let y = orbit[cursor];
                for &g in group.generators() {
                    let conj = group.mul(group.mul(g, y), group.inv(g));
                    if class_of[conj] == usize::MAX {
                        class_of[conj] = id;
                        orbit.push(conj);
                    }
                }
                cursor += 1;
            }
            orbit.sort_unstable();
            members.push(orbit);
        }

        let sizes: Vec<usize> = members.iter().map(Vec::len).collect();
        assert_eq!(sizes.iter().sum::<usize>(), n, "class equation");

        let inverse_class = reps.iter().map(|&r| class_of[group.inv(r)]).collect();

        ConjClasses {
            reps,
            sizes,
            class_of,
            members,
            inverse_class,
        }
    }

    pub fn count(&self) -> usize {
        self.reps.len()
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    pub fn members(&self, class: usize) -> &[usize] {
        &self.members[class]
    }

    pub fn inverse_class(&self, class: usize) -> usize {
        self.inverse_class[class]
    }
}

impl FiniteGroup {
    /// Class of the `k`-th powers of the elements of a class.
    pub fn power_class(&self, class: usize, k: u64) -> usize {
        let classes = self.conjugacy_classes();
        let rep = classes.reps()[class];
        classes.class_of(self.pow(rep, k))
    }
}

#[cfg(test)]
mod tests {
    use crate::groups::{alternating, elementary_abelian, quaternion8, symmetric, FiniteGroup};

    #[test]
    fn abelian_classes_are_singletons() {
        let g = elementary_abelian(3, 2).unwrap();
        let c = g.conjugacy_classes();
        assert_eq!(c.count(), 9);
        assert!(c.sizes().iter().all(|&s| s == 1));
    }

    #[test]
    fn s3_class_sizes() {
        let g = symmetric(3).unwrap();
        let c = g.conjugacy_classes();
        let mut sizes = c.sizes().to_vec();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn q8_class_sizes() {
        let g = quaternion8().unwrap();
        let c = g.conjugacy_classes();
        let mut sizes = c.sizes().to_vec();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn power_maps_are_class_functions() {
        let g = alternating(4).unwrap();
        let c = g.conjugacy_classes();
        for class in 0..c.count() {
            for k in 0..=g.exponent() {
                let expected = g.power_class(class, k);
                for &m in c.members(class) {
                    assert_eq!(c.class_of(g.pow(m, k)), expected);
                }
            }
        }
        // p_1 is the identity map
        for class in 0..c.count() {
            assert_eq!(g.power_class(class, 1), class);
        }
    }

    #[test]
    fn involution_counts() {
        assert_eq!(quaternion8().unwrap().involution_count(), 2);
        assert_eq!(symmetric(3).unwrap().involution_count(), 4);
        assert_eq!(FiniteGroup::trivial().involution_count(), 1);
    }
}
