use core::cmp::Ordering;
use core::fmt;

/// A monomial `x^a y^b z^c`.
///
/// `Ord` is graded reverse lexicographic with `x > y > z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u32; 3]);

pub(crate) const VARIABLES: [char; 3] = ['x', 'y', 'z'];

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub const fn new(x: u32, y: u32, z: u32) -> Monomial {
        Monomial([x, y, z])
    }

    /// The monomial consisting of a single variable (0 = x, 1 = y, 2 = z).
    pub fn variable(index: usize, power: u32) -> Monomial {
        let mut e = [0; 3];
        e[index] = power;
        Monomial(e)
    }

    pub fn exponents(&self) -> [u32; 3] {
        self.0
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.0[index]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0, 0, 0]
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`, when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial([
                self.0[0] - other.0[0],
                self.0[1] - other.0[1],
                self.0[2] - other.0[2],
            ]))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0].max(other.0[0]),
            self.0[1].max(other.0[1]),
            self.0[2].max(other.0[2]),
        ])
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `Some(i)` when the monomial is a pure power of variable `i`.
    pub fn pure_power_of(&self) -> Option<usize> {
        let nonzero: usize = self.0.iter().filter(|e| **e > 0).count();
        if nonzero == 1 {
            self.0.iter().position(|e| *e > 0)
        } else {
            None
        }
    }
}

impl core::ops::Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial([self.0[0] + rhs.0[0], self.0[1] + rhs.0[1], self.0[2] + rhs.0[2]])
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in (0..3).rev() {
            match self.0[i].cmp(&other.0[i]) {
                Ordering::Equal => continue,
                ord => return ord.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (v, e) in VARIABLES.iter().zip(self.0.iter()) {
            if *e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn grevlex_examples() {
        // x > y > z in degree one
        assert!(Monomial::new(1, 0, 0) > Monomial::new(0, 1, 0));
        assert!(Monomial::new(0, 1, 0) > Monomial::new(0, 0, 1));
        // xz^1 vs y^2: the one with smaller last exponent is larger
        assert!(Monomial::new(0, 2, 0) > Monomial::new(1, 0, 1));
        // degree dominates
        assert!(Monomial::new(0, 0, 2) > Monomial::new(1, 0, 0));
    }

    fn mono() -> impl Strategy<Value = Monomial> {
        (0u32..6, 0u32..6, 0u32..6).prop_map(|(a, b, c)| Monomial::new(a, b, c))
    }

    proptest! {
        #[test]
        fn order_is_multiplicative(a in mono(), b in mono(), c in mono()) {
            prop_assert_eq!(a.cmp(&b), (a * c).cmp(&(b * c)));
        }

        #[test]
        fn order_is_total_and_antisymmetric(a in mono(), b in mono()) {
            prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
            prop_assert_eq!(a.cmp(&b) == Ordering::Equal, a == b);
        }

        #[test]
        fn one_is_minimal(a in mono()) {
            prop_assert!(Monomial::ONE <= a);
        }
    }
}
