//! Weight lattice of `GL3 x Gm`, its Weyl group and the rho-shifted action.
//!
//! Characters of the maximal torus are written as `(x, y, z, w)`: the first
//! three coordinates are the exponents of the diagonal entries of `GL3`, the
//! last one the exponent of the `Gm` factor. The Weyl group is `S3` acting on
//! the first three coordinates; the positive roots are `e12`, `e23`, `e13`
//! and `rho = e13 = (1, 0, -1, 0)`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A character of the maximal torus, as an integer 4-tuple.
///
/// Ordering is lexicographic on `(x, y, z, w)`.
#[derive(
    Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
#[serde(from = "[i64; 4]", into = "[i64; 4]")]
pub struct TorusCharacter {
    pub x: i64,
    pub y: i64,
    pub z: i64,
    pub w: i64,
}

impl TorusCharacter {
    pub const ZERO: TorusCharacter = TorusCharacter::new(0, 0, 0, 0);

    pub const fn new(x: i64, y: i64, z: i64, w: i64) -> Self {
        TorusCharacter { x, y, z, w }
    }

    /// The `GL3` part as an array.
    pub const fn gl3(&self) -> [i64; 3] {
        [self.x, self.y, self.z]
    }

    pub const fn to_array(self) -> [i64; 4] {
        [self.x, self.y, self.z, self.w]
    }

    pub fn is_dominant(&self) -> bool {
        is_dominant(self)
    }

    fn scale(self, k: i64) -> Self {
        TorusCharacter::new(self.x * k, self.y * k, self.z * k, self.w * k)
    }

    pub(crate) fn add_scaled(self, other: TorusCharacter, k: i64) -> Self {
        self + other.scale(k)
    }
}

impl From<[i64; 4]> for TorusCharacter {
    fn from([x, y, z, w]: [i64; 4]) -> Self {
        TorusCharacter::new(x, y, z, w)
    }
}

impl From<TorusCharacter> for [i64; 4] {
    fn from(chi: TorusCharacter) -> Self {
        chi.to_array()
    }
}

impl Add for TorusCharacter {
    type Output = TorusCharacter;

    fn add(self, rhs: Self) -> Self {
        TorusCharacter::new(
            self.x + rhs.x,
            self.y + rhs.y,
            self.z + rhs.z,
            self.w + rhs.w,
        )
    }
}

impl Sub for TorusCharacter {
    type Output = TorusCharacter;

    fn sub(self, rhs: Self) -> Self {
        TorusCharacter::new(
            self.x - rhs.x,
            self.y - rhs.y,
            self.z - rhs.z,
            self.w - rhs.w,
        )
    }
}

impl Neg for TorusCharacter {
    type Output = TorusCharacter;

    fn neg(self) -> Self {
        self.scale(-1)
    }
}

impl fmt::Display for TorusCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.x, self.y, self.z, self.w)
    }
}

/// True iff `x >= y >= z`.
pub fn is_dominant(chi: &TorusCharacter) -> bool {
    chi.x >= chi.y && chi.y >= chi.z
}

/// A dominant character `(a, b, c, d)` with `a >= b >= c`; the highest weight
/// of the irreducible representation `F_{a,b,c,d}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "TorusCharacter", into = "TorusCharacter")]
pub struct DominantWeight(TorusCharacter);

impl DominantWeight {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::try_from(TorusCharacter::new(a, b, c, d))
    }

    pub const fn character(&self) -> TorusCharacter {
        self.0
    }

    pub const fn a(&self) -> i64 {
        self.0.x
    }

    pub const fn b(&self) -> i64 {
        self.0.y
    }

    pub const fn c(&self) -> i64 {
        self.0.z
    }

    pub const fn d(&self) -> i64 {
        self.0.w
    }

    /// `(-c, -b, -a, a + b + c + d)`: the highest weight of the conjugate
    /// representation that pairs with this one under Hodge symmetry.
    pub fn hodge_conjugate(&self) -> DominantWeight {
        let (a, b, c, d) = (self.a(), self.b(), self.c(), self.d());
        DominantWeight(TorusCharacter::new(-c, -b, -a, a + b + c + d))
    }
}

impl TryFrom<TorusCharacter> for DominantWeight {
    type Error = Error;

    fn try_from(chi: TorusCharacter) -> Result<Self> {
        if is_dominant(&chi) {
            Ok(DominantWeight(chi))
        } else {
            Err(Error::NotDominant(chi))
        }
    }
}

impl From<DominantWeight> for TorusCharacter {
    fn from(lambda: DominantWeight) -> Self {
        lambda.0
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Half the sum of the positive roots, which here is the root `e13`.
pub const RHO: TorusCharacter = TorusCharacter::new(1, 0, -1, 0);

/// An element of the Weyl group `S3`, stored as the images `sigma(1..=3)`
/// (zero-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    images: [u8; 3],
    length: u8,
}

impl WeylElement {
    pub const IDENTITY: WeylElement = WeylElement {
        images: [0, 1, 2],
        length: 0,
    };
    /// The transposition `(12)`.
    pub const S12: WeylElement = WeylElement {
        images: [1, 0, 2],
        length: 1,
    };
    /// The transposition `(23)`.
    pub const S23: WeylElement = WeylElement {
        images: [0, 2, 1],
        length: 1,
    };
    /// The 3-cycle `(123)`: 1 -> 2 -> 3 -> 1.
    pub const C123: WeylElement = WeylElement {
        images: [1, 2, 0],
        length: 2,
    };
    /// The 3-cycle `(132)`: 1 -> 3 -> 2 -> 1.
    pub const C132: WeylElement = WeylElement {
        images: [2, 0, 1],
        length: 2,
    };
    /// The longest element `(13)`.
    pub const S13: WeylElement = WeylElement {
        images: [2, 1, 0],
        length: 3,
    };

    /// All six elements, ordered by length.
    pub const ALL: [WeylElement; 6] = [
        Self::IDENTITY,
        Self::S12,
        Self::S23,
        Self::C123,
        Self::C132,
        Self::S13,
    ];

    /// Look up the element with the given images, if it is a permutation of
    /// `{0, 1, 2}`.
    pub fn from_images(images: [u8; 3]) -> Option<WeylElement> {
        Self::ALL.into_iter().find(|s| s.images == images)
    }

    pub const fn images(&self) -> [u8; 3] {
        self.images
    }

    pub const fn length(&self) -> u32 {
        self.length as u32
    }

    pub fn inverse(&self) -> WeylElement {
        let mut inv = [0u8; 3];
        for (i, &img) in self.images.iter().enumerate() {
            inv[img as usize] = i as u8;
        }
        Self::from_images(inv).expect("inverse of a permutation is a permutation")
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let images = other.images.map(|i| self.images[i as usize]);
        Self::from_images(images).expect("composition of permutations is a permutation")
    }

    /// Permute the first three coordinates: `(σχ)_{σ(i)} = χ_i`.
    pub fn act(&self, chi: &TorusCharacter) -> TorusCharacter {
        let src = chi.gl3();
        let mut dst = [0i64; 3];
        for (i, &img) in self.images.iter().enumerate() {
            dst[img as usize] = src[i];
        }
        TorusCharacter::new(dst[0], dst[1], dst[2], chi.w)
    }

    /// Number of positive roots `e_ij` (i < j) sent to a negative root by
    /// `σ^{-1}`, counted directly from the root system.
    pub fn count_inverted_roots(&self) -> u32 {
        let inv = self.inverse();
        let mut count = 0;
        for i in 0..3u8 {
            for j in (i + 1)..3u8 {
                // σ^{-1} e_ij = e_{σ^{-1}(i) σ^{-1}(j)}
                if inv.images[i as usize] > inv.images[j as usize] {
                    count += 1;
                }
            }
        }
        count
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.images {
            [0, 1, 2] => "e",
            [1, 0, 2] => "(12)",
            [0, 2, 1] => "(23)",
            [1, 2, 0] => "(123)",
            [2, 0, 1] => "(132)",
            _ => "(13)",
        };
        f.write_str(name)
    }
}

pub fn weyl_length(sigma: &WeylElement) -> u32 {
    sigma.length()
}

/// The twisted action `σ(λ + ρ) − ρ`.
pub fn rho_shift(sigma: &WeylElement, lambda: &TorusCharacter) -> TorusCharacter {
    sigma.act(&(*lambda + RHO)) - RHO
}

/// Checks the precomputed length table against the root-counting definition.
pub fn self_check() -> Result<()> {
    for sigma in WeylElement::ALL {
        let counted = sigma.count_inverted_roots();
        if counted != sigma.length() {
            return Err(Error::SelfCheck(format!(
                "length table says l({sigma}) = {}, root count gives {counted}",
                sigma.length()
            )));
        }
    }
    Ok(())
}
