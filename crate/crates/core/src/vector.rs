//! Bracketed cross products of signed unit vectors, their emulation in the
//! quaternion group, and the projection onto letters through the Klein group.
//!
//! Nothing here depends on the grammar module: the tuple counts are an
//! independent route to the same parse-word numbers.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::grammar::Letter;
use crate::tree::{Tree, VertexId};

/// One of `±î, ±ĵ, ±k̂` or the zero vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SignedVector {
    Zero,
    PlusI,
    MinusI,
    PlusJ,
    MinusJ,
    PlusK,
    MinusK,
}

impl SignedVector {
    pub const ALL: [SignedVector; 7] = [
        SignedVector::Zero,
        SignedVector::PlusI,
        SignedVector::MinusI,
        SignedVector::PlusJ,
        SignedVector::MinusJ,
        SignedVector::PlusK,
        SignedVector::MinusK,
    ];

    /// The positive unit vectors `î, ĵ, k̂`.
    pub const UNITS: [SignedVector; 3] = [SignedVector::PlusI, SignedVector::PlusJ, SignedVector::PlusK];

    const fn index(self) -> usize {
        self as usize
    }

    const fn from_index(i: usize) -> SignedVector {
        SignedVector::ALL[i]
    }

    /// Axis 0, 1, 2 for `î, ĵ, k̂` and whether the sign is negative.
    const fn axis(self) -> Option<(usize, bool)> {
        match self {
            SignedVector::Zero => None,
            v => {
                let i = v.index() - 1;
                Some((i / 2, i % 2 == 1))
            }
        }
    }

    const fn from_axis(axis: usize, negative: bool) -> SignedVector {
        SignedVector::from_index(1 + 2 * axis + negative as usize)
    }

    pub fn negate(self) -> SignedVector {
        match self.axis() {
            None => SignedVector::Zero,
            Some((a, neg)) => SignedVector::from_axis(a, !neg),
        }
    }

    pub fn is_zero(self) -> bool {
        self == SignedVector::Zero
    }
}

impl fmt::Display for SignedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignedVector::Zero => "0",
            SignedVector::PlusI => "+i",
            SignedVector::MinusI => "-i",
            SignedVector::PlusJ => "+j",
            SignedVector::MinusJ => "-j",
            SignedVector::PlusK => "+k",
            SignedVector::MinusK => "-k",
        })
    }
}

const fn build_cross_table() -> [[SignedVector; 7]; 7] {
    let mut table = [[SignedVector::Zero; 7]; 7];
    let mut a = 1;
    while a < 7 {
        let mut b = 1;
        while b < 7 {
            let (ax, an) = ((a - 1) / 2, (a - 1) % 2 == 1);
            let (bx, bn) = ((b - 1) / 2, (b - 1) % 2 == 1);
            if ax != bx {
                // î×ĵ = k̂ and cyclic shifts are positive; reversing the
                // order or negating one factor flips the sign
                let cyclic = bx == (ax + 1) % 3;
                let negative = !cyclic ^ an ^ bn;
                table[a][b] = SignedVector::from_axis(3 - ax - bx, negative);
            }
            b += 1;
        }
        a += 1;
    }
    table
}

/// `CROSS[a][b] = a × b`, indexed by [`SignedVector`] discriminant.
pub const CROSS: [[SignedVector; 7]; 7] = build_cross_table();

pub fn cross(a: SignedVector, b: SignedVector) -> SignedVector {
    CROSS[a.index()][b.index()]
}

/// Element of the quaternion group `{±1, ±i, ±j, ±k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quaternion {
    One,
    MinusOne,
    I,
    MinusI,
    J,
    MinusJ,
    K,
    MinusK,
}

impl Quaternion {
    pub const ALL: [Quaternion; 8] = [
        Quaternion::One,
        Quaternion::MinusOne,
        Quaternion::I,
        Quaternion::MinusI,
        Quaternion::J,
        Quaternion::MinusJ,
        Quaternion::K,
        Quaternion::MinusK,
    ];

    /// Unit 0 for `±1`, 1..3 for `±i, ±j, ±k`, and the sign.
    fn parts(self) -> (usize, bool) {
        let i = self as usize;
        (i / 2, i % 2 == 1)
    }

    fn from_parts(unit: usize, negative: bool) -> Quaternion {
        Quaternion::ALL[2 * unit + negative as usize]
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;

    fn mul(self, rhs: Quaternion) -> Quaternion {
        let (a, an) = self.parts();
        let (b, bn) = rhs.parts();
        let sign = an ^ bn;
        match (a, b) {
            (0, _) => Quaternion::from_parts(b, sign),
            (_, 0) => Quaternion::from_parts(a, sign),
            _ if a == b => Quaternion::from_parts(0, !sign),
            _ => {
                // units 1, 2, 3 are i, j, k; ij = k, jk = i, ki = j
                let cyclic = b == a % 3 + 1;
                Quaternion::from_parts(6 - a - b, sign ^ !cyclic)
            }
        }
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quaternion::One => "1",
            Quaternion::MinusOne => "-1",
            Quaternion::I => "i",
            Quaternion::MinusI => "-i",
            Quaternion::J => "j",
            Quaternion::MinusJ => "-j",
            Quaternion::K => "k",
            Quaternion::MinusK => "-k",
        })
    }
}

/// `±î ↦ ±i` and so on.
pub fn phi(v: SignedVector) -> Result<Quaternion> {
    let (axis, negative) = v.axis().ok_or(Error::ZeroInput)?;
    Ok(Quaternion::from_parts(axis + 1, negative))
}

/// Inverse of [`phi`]; `±1` have no preimage.
pub fn phi_inverse(q: Quaternion) -> Option<SignedVector> {
    let (unit, negative) = q.parts();
    (unit != 0).then(|| SignedVector::from_axis(unit - 1, negative))
}

/// Element of the Klein four-group `{e, 0, 1, 2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Klein {
    E,
    Letter(Letter),
}

impl Klein {
    pub const ALL: [Klein; 4] = [Klein::E, Klein::Letter(0), Klein::Letter(1), Klein::Letter(2)];
}

impl Mul for Klein {
    type Output = Klein;

    fn mul(self, rhs: Klein) -> Klein {
        match (self, rhs) {
            (Klein::E, x) | (x, Klein::E) => x,
            (Klein::Letter(a), Klein::Letter(b)) if a == b => Klein::E,
            (Klein::Letter(a), Klein::Letter(b)) => Klein::Letter(3 - a - b),
        }
    }
}

/// The quotient `Q -> Q/{±1}`.
pub fn sigma(q: Quaternion) -> Klein {
    match q.parts().0 {
        0 => Klein::E,
        u => Klein::Letter(u as Letter - 1),
    }
}

/// Drops the hat and the sign: `±î -> 0`, `±ĵ -> 1`, `±k̂ -> 2`.
pub fn tau(v: SignedVector) -> Result<Letter> {
    match sigma(phi(v)?) {
        Klein::Letter(l) => Ok(l),
        Klein::E => unreachable!("phi never yields ±1"),
    }
}

/// Evaluates the cross product of `vs` bracketed by the shape of `t`.
pub fn evaluate_bracketing(t: &Tree, vs: &[SignedVector]) -> Result<SignedVector> {
    if vs.len() != t.leaf_count() {
        return Err(Error::LengthMismatch {
            left: t.leaf_count(),
            right: vs.len(),
        });
    }
    let mut values = vec![SignedVector::Zero; t.vertex_count()];
    Ok(evaluate_into(t, vs, &mut values))
}

fn evaluate_into(t: &Tree, vs: &[SignedVector], values: &mut [SignedVector]) -> SignedVector {
    let mut leaf = vs.len();
    for v in (0..t.vertex_count()).rev() {
        let id = VertexId::from_index(v);
        values[v] = match t.children(id) {
            None => {
                leaf -= 1;
                vs[leaf]
            }
            Some((l, r)) => cross(values[l.index()], values[r.index()]),
        };
    }
    values[0]
}

/// The product `phi(v1) · phi(v2) ⋯ phi(vn)`.
pub fn quaternion_product(vs: &[SignedVector]) -> Result<Quaternion> {
    vs.iter().try_fold(Quaternion::One, |acc, &v| Ok(acc * phi(v)?))
}

/// Calls `visit` with every tuple in `{î, ĵ, k̂}^n` that evaluates to a
/// nonzero vector under both bracketings.
pub fn for_each_nonzero_tuple(t1: &Tree, t2: &Tree, mut visit: impl FnMut(&[SignedVector])) -> Result<()> {
    let n = t1.leaf_count();
    if t2.leaf_count() != n {
        return Err(Error::LengthMismatch {
            left: n,
            right: t2.leaf_count(),
        });
    }
    let mut digits = vec![0usize; n];
    let mut tuple = vec![SignedVector::PlusI; n];
    let mut scratch1 = vec![SignedVector::Zero; t1.vertex_count()];
    let mut scratch2 = vec![SignedVector::Zero; t2.vertex_count()];
    loop {
        if !evaluate_into(t1, &tuple, &mut scratch1).is_zero() && !evaluate_into(t2, &tuple, &mut scratch2).is_zero() {
            visit(&tuple);
        }
        // odometer over base-3 digits, last position fastest
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(());
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < 3 {
                tuple[pos] = SignedVector::UNITS[digits[pos]];
                break;
            }
            digits[pos] = 0;
            tuple[pos] = SignedVector::UNITS[0];
        }
    }
}

/// Number of tuples in `{î, ĵ, k̂}^n` nonzero under both bracketings, by
/// exhaustive evaluation.
pub fn count_nonzero_tuples(t1: &Tree, t2: &Tree) -> Result<u64> {
    let mut count = 0u64;
    for_each_nonzero_tuple(t1, t2, |_| count += 1)?;
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::Family;
    use SignedVector::*;

    #[test]
    fn cross_matches_the_generating_identities() {
        let k_rows = [(PlusI, PlusJ), (MinusI, MinusJ), (MinusJ, PlusI), (PlusJ, MinusI)];
        let i_rows = [(PlusJ, PlusK), (MinusJ, MinusK), (MinusK, PlusJ), (PlusK, MinusJ)];
        let j_rows = [(PlusK, PlusI), (MinusK, MinusI), (MinusI, PlusK), (PlusI, MinusK)];
        for (rows, out) in [(k_rows, PlusK), (i_rows, PlusI), (j_rows, PlusJ)] {
            for (a, b) in rows {
                assert_eq!(cross(a, b), out, "{a} x {b}");
                // anticommutativity
                assert_eq!(cross(b, a), out.negate(), "{b} x {a}");
            }
        }
        for v in SignedVector::ALL {
            assert_eq!(cross(v, v), Zero);
            assert_eq!(cross(v, v.negate()), Zero);
            assert_eq!(cross(v, Zero), Zero);
            assert_eq!(cross(Zero, v), Zero);
        }
    }

    #[test]
    fn cross_examples() {
        assert_eq!(cross(PlusI, PlusJ), PlusK);
        assert_eq!(cross(PlusI, PlusI), Zero);
        assert_eq!(cross(MinusK, PlusJ), PlusI);
        assert_eq!(cross(PlusJ, MinusK), MinusI);
    }

    #[test]
    fn quaternion_table() {
        use Quaternion as Q;
        for (a, b, c) in [
            (Q::I, Q::J, Q::K),
            (Q::MinusI, Q::MinusJ, Q::K),
            (Q::MinusJ, Q::I, Q::K),
            (Q::J, Q::MinusI, Q::K),
            (Q::J, Q::K, Q::I),
            (Q::MinusJ, Q::MinusK, Q::I),
            (Q::MinusK, Q::J, Q::I),
            (Q::K, Q::MinusJ, Q::I),
            (Q::K, Q::I, Q::J),
            (Q::MinusK, Q::MinusI, Q::J),
            (Q::MinusI, Q::K, Q::J),
            (Q::I, Q::MinusK, Q::J),
            (Q::MinusOne, Q::MinusOne, Q::One),
            (Q::MinusOne, Q::I, Q::MinusI),
        ] {
            assert_eq!(a * b, c, "{a}·{b}");
        }
        for q in [Q::I, Q::J, Q::K, Q::MinusI, Q::MinusJ, Q::MinusK] {
            assert_eq!(q * q, Q::MinusOne);
            let neg = Quaternion::from_parts(q.parts().0, !q.parts().1);
            assert_eq!(q * neg, Q::One);
        }
        // associativity over the whole group
        for a in Q::ALL {
            for b in Q::ALL {
                for c in Q::ALL {
                    assert_eq!((a * b) * c, a * (b * c));
                }
            }
        }
    }

    #[test]
    fn quaternion_product_examples() {
        assert_eq!(quaternion_product(&[PlusI, PlusJ]).unwrap(), Quaternion::K);
        assert_eq!(quaternion_product(&[PlusI, PlusI]).unwrap(), Quaternion::MinusOne);
        assert_eq!(
            quaternion_product(&[PlusI, PlusJ, PlusK]).unwrap(),
            Quaternion::MinusOne
        );
        assert_eq!(quaternion_product(&[PlusI, Zero]), Err(Error::ZeroInput));
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(PlusI).unwrap(), 0);
        assert_eq!(tau(MinusK).unwrap(), 2);
        assert_eq!(tau(PlusJ).unwrap(), 1);
        assert_eq!(tau(Zero), Err(Error::ZeroInput));
    }

    #[test]
    fn phi_is_a_partial_homomorphism() {
        for a in SignedVector::ALL.into_iter().skip(1) {
            for b in SignedVector::ALL.into_iter().skip(1) {
                if a != b && a != b.negate() {
                    assert_eq!(phi(cross(a, b)).unwrap(), phi(a).unwrap() * phi(b).unwrap());
                }
            }
            assert_eq!(phi_inverse(phi(a).unwrap()), Some(a));
        }
        assert_eq!(phi_inverse(Quaternion::One), None);
    }

    #[test]
    fn sigma_is_a_homomorphism() {
        for a in Quaternion::ALL {
            for b in Quaternion::ALL {
                assert_eq!(sigma(a * b), sigma(a) * sigma(b));
            }
        }
        assert_eq!(sigma(Quaternion::MinusOne), Klein::E);
        assert_eq!(sigma(Quaternion::MinusJ), Klein::Letter(1));
    }

    #[test]
    fn bracketing_examples() {
        let cherry = Tree::cherry();
        assert_eq!(evaluate_bracketing(&cherry, &[PlusI, PlusJ]).unwrap(), PlusK);
        assert_eq!(evaluate_bracketing(&cherry, &[PlusI, PlusI]).unwrap(), Zero);
        let comb = Family::LeftComb(3).build().unwrap();
        // (î×ĵ)×î = k̂×î = ĵ
        assert_eq!(evaluate_bracketing(&comb, &[PlusI, PlusJ, PlusI]).unwrap(), PlusJ);
        assert_eq!(
            phi_inverse(quaternion_product(&[PlusI, PlusJ, PlusI]).unwrap()),
            Some(PlusJ)
        );
        assert!(evaluate_bracketing(&comb, &[PlusI]).is_err());
    }

    #[test]
    fn tuple_count_examples() {
        let cherry = Tree::cherry();
        assert_eq!(count_nonzero_tuples(&cherry, &cherry).unwrap(), 6);
        assert_eq!(count_nonzero_tuples(&Tree::leaf(), &Tree::leaf()).unwrap(), 3);
        let intro = crate::catalog::intro_pair();
        assert_eq!(count_nonzero_tuples(intro.t1(), intro.t2()).unwrap(), 6);
        assert!(count_nonzero_tuples(&cherry, &Tree::leaf()).is_err());
    }
}
