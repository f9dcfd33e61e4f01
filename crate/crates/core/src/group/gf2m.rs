//! Arithmetic in GF(2^m) for small m.

/// Field context: degree and reduction polynomial (bit i is the coefficient of x^i).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Gf2m {
    m: u32,
    modulus: u32,
}

/// An element of GF(2^m) as a polynomial over GF(2) of degree < m.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2mElement(pub u32);

impl Gf2m {
    /// Fixed moduli: x+1, x^2+x+1, x^3+x+1, x^4+x+1, x^5+x^2+1.
    pub fn standard(m: u32) -> Option<Gf2m> {
        let modulus = match m {
            1 => 0b11,
            2 => 0b111,
            3 => 0b1011,
            4 => 0b1_0011,
            5 => 0b10_0101,
            _ => return None,
        };
        Some(Gf2m { m, modulus })
    }

    pub fn with_modulus(m: u32, modulus: u32) -> Option<Gf2m> {
        let f = Gf2m { m, modulus };
        (modulus >> m == 1 && f.modulus_is_irreducible()).then_some(f)
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn size(&self) -> u32 {
        1 << self.m
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn zero(&self) -> Gf2mElement {
        Gf2mElement(0)
    }

    pub fn one(&self) -> Gf2mElement {
        Gf2mElement(1)
    }

    /// The class of `x`; a generator of the multiplicative group for the
    /// standard moduli with m >= 2.
    pub fn x(&self) -> Gf2mElement {
        self.reduce(0b10)
    }

    pub fn elements(&self) -> impl Iterator<Item = Gf2mElement> {
        (0..self.size()).map(Gf2mElement)
    }

    fn reduce(&self, mut v: u32) -> Gf2mElement {
        let m = self.m;
        let mut top = 31 - v.leading_zeros().min(31);
        while v != 0 && top >= m {
            if v >> top & 1 == 1 {
                v ^= self.modulus << (top - m);
            }
            if top == 0 {
                break;
            }
            top -= 1;
        }
        Gf2mElement(v)
    }

    pub fn add(&self, a: Gf2mElement, b: Gf2mElement) -> Gf2mElement {
        Gf2mElement(a.0 ^ b.0)
    }

    pub fn mul(&self, a: Gf2mElement, b: Gf2mElement) -> Gf2mElement {
        let mut acc = 0u32;
        for i in 0..self.m {
            if b.0 >> i & 1 == 1 {
                acc ^= a.0 << i;
            }
        }
        self.reduce(acc)
    }

    pub fn pow(&self, a: Gf2mElement, mut k: u32) -> Gf2mElement {
        let (mut acc, mut base) = (self.one(), a);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Gf2mElement) -> Option<Gf2mElement> {
        (a.0 != 0).then(|| self.pow(a, self.size() - 2))
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Gf2mElement) -> Option<u32> {
        if a.0 == 0 {
            return None;
        }
        let mut y = a;
        let mut k = 1;
        while y != self.one() {
            y = self.mul(y, a);
            k += 1;
        }
        Some(k)
    }

    /// Trial division by every polynomial of degree 1..=m/2.
    pub fn modulus_is_irreducible(&self) -> bool {
        let f = self.modulus;
        for d in 1..=self.m / 2 {
            for g in (1u32 << d)..(1u32 << (d + 1)) {
                if poly_rem(f, g) == 0 {
                    return false;
                }
            }
        }
        true
    }
}

fn poly_rem(mut f: u32, g: u32) -> u32 {
    let dg = 31 - g.leading_zeros();
    while f != 0 && 31 - f.leading_zeros() >= dg {
        f ^= g << (31 - f.leading_zeros() - dg);
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_moduli_are_irreducible_and_x_is_primitive() {
        for m in 1..=5 {
            let f = Gf2m::standard(m).unwrap();
            assert!(f.modulus_is_irreducible(), "m={m}");
            let nonzero = f.elements().filter(|a| a.0 != 0).count() as u32;
            assert_eq!(nonzero, f.size() - 1);
            if m >= 2 {
                assert_eq!(f.order(f.x()), Some(f.size() - 1), "m={m}");
            }
        }
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^2 + 1 = (x + 1)^2
        assert!(Gf2m::with_modulus(2, 0b101).is_none());
        assert!(Gf2m::with_modulus(3, 0b1101).is_some());
    }

    #[test]
    fn inverses() {
        let f = Gf2m::standard(4).unwrap();
        for a in f.elements().skip(1) {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
        }
        assert_eq!(f.inv(f.zero()), None);
    }

    #[test]
    fn gf4_multiplication_table() {
        let f = Gf2m::standard(2).unwrap();
        // x * x = x + 1 in GF(4)
        assert_eq!(f.mul(Gf2mElement(2), Gf2mElement(2)), Gf2mElement(3));
        assert_eq!(f.mul(Gf2mElement(3), Gf2mElement(3)), Gf2mElement(2));
    }
}
