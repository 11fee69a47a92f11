use std::fmt;
use std::ops::Mul;

/// `g1^p g2^q` in the Klein four-group, stored as the index `p + 2q`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KleinElement(u8);

impl KleinElement {
    pub const E: KleinElement = KleinElement(0);
    pub const G1: KleinElement = KleinElement(1);
    pub const G2: KleinElement = KleinElement(2);
    pub const G1G2: KleinElement = KleinElement(3);

    pub const ALL: [KleinElement; 4] = [Self::E, Self::G1, Self::G2, Self::G1G2];

    pub fn from_bits(p: u8, q: u8) -> Self {
        KleinElement((p & 1) | ((q & 1) << 1))
    }

    pub fn from_index(i: usize) -> Self {
        assert!(i < 4, "Klein index out of range");
        KleinElement(i as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Exponent of `g1`.
    pub fn p(self) -> u8 {
        self.0 & 1
    }

    /// Exponent of `g2`.
    pub fn q(self) -> u8 {
        self.0 >> 1
    }

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }

    pub fn inverse(self) -> Self {
        self
    }

    pub fn name(self) -> &'static str {
        ["e", "g1", "g2", "g1g2"][self.index()]
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "e" => Some(Self::E),
            "g1" => Some(Self::G1),
            "g2" => Some(Self::G2),
            "g1g2" => Some(Self::G1G2),
            _ => None,
        }
    }

    /// The sign by which `self` acts on the generator of degree `h`: the
    /// character paired with `self` under `G ≅ G^∨`, which is `-1` exactly
    /// when `self ≠ e` and `h ∉ {e, self}`.
    pub fn character(self, h: KleinElement) -> i8 {
        if !self.is_identity() && !h.is_identity() && h != self {
            -1
        } else {
            1
        }
    }
}

impl Mul for KleinElement {
    type Output = KleinElement;
    // the group law is addition of bit pairs mod 2
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: KleinElement) -> KleinElement {
        KleinElement(self.0 ^ rhs.0)
    }
}

impl fmt::Display for KleinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Debug for KleinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl serde::Serialize for KleinElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_law() {
        use KleinElement as K;
        assert_eq!(K::G1 * K::G2, K::G1G2);
        for g in K::ALL {
            assert_eq!(g * g, K::E);
            assert_eq!(g * K::E, g);
            assert_eq!(K::parse(g.name()), Some(g));
        }
        assert_eq!(K::from_bits(1, 1), K::G1G2);
    }

    #[test]
    fn characters_are_homomorphisms() {
        use KleinElement as K;
        for g in K::ALL {
            for a in K::ALL {
                for b in K::ALL {
                    assert_eq!(g.character(a * b), g.character(a) * g.character(b));
                }
            }
        }
        assert_eq!(K::G1.character(K::G2), -1);
        assert_eq!(K::G1.character(K::G1), 1);
    }
}
