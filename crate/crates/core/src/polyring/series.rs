//! Truncated power series in one expansion variable with [`MultiPoly`]
//! coefficients.
//!
//! The expansion variable is `r` (shifted through `s`) or `p` (shifted
//! through `q`). A shift by `j` realizes the substitution `r -> r*s^j`,
//! which every recurrence in this crate acts through: coefficient `n`
//! picks up `s^{j*n}`.

use std::ops::{Add, Mul, Sub};

use super::poly::{MultiPoly, Var};

/// Expansion variable tag of a series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesVar {
    R,
    P,
}

impl SeriesVar {
    pub fn symbol(self) -> char {
        match self {
            SeriesVar::R => 'r',
            SeriesVar::P => 'p',
        }
    }

    /// The ring variable a shift multiplies into the coefficients.
    pub fn shift_var(self) -> Var {
        match self {
            SeriesVar::R => Var::S,
            SeriesVar::P => Var::Q,
        }
    }
}

/// Power series truncated at a fixed order: coefficients `0..=order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RSeries {
    var: SeriesVar,
    coeffs: Vec<MultiPoly>,
}

impl RSeries {
    pub fn zero(var: SeriesVar, order: usize) -> Self {
        RSeries {
            var,
            coeffs: vec![MultiPoly::zero(); order + 1],
        }
    }

    pub fn one(var: SeriesVar, order: usize) -> Self {
        Self::constant(var, order, MultiPoly::one())
    }

    pub fn constant(var: SeriesVar, order: usize, c: MultiPoly) -> Self {
        let mut s = Self::zero(var, order);
        s.coeffs[0] = c;
        s
    }

    pub fn from_coeffs(var: SeriesVar, coeffs: Vec<MultiPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least coefficient 0");
        RSeries { var, coeffs }
    }

    pub fn var(&self) -> SeriesVar {
        self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &MultiPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, n: usize, c: MultiPoly) {
        self.coeffs[n] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(MultiPoly::is_zero)
    }

    /// Index of the lowest nonzero coefficient, if any.
    pub fn lowest_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> RSeries {
        let end = order.min(self.order());
        RSeries {
            var: self.var,
            coeffs: self.coeffs[..=end].to_vec(),
        }
    }

    /// The substitution `r -> r*s^j` (or `p -> p*q^j`): coefficient `n`
    /// is multiplied by the shift variable to the power `j*n`.
    pub fn shift(&self, j: u32) -> RSeries {
        if j == 0 {
            return self.clone();
        }
        let sv = self.var.shift_var();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.mul_var_pow(sv, j * n as u32))
            .collect();
        RSeries {
            var: self.var,
            coeffs,
        }
    }

    /// Multiply every coefficient by a fixed polynomial.
    pub fn scale(&self, c: &MultiPoly) -> RSeries {
        RSeries {
            var: self.var,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiply by the expansion variable itself, truncating at the order.
    pub fn mul_expansion_var(&self) -> RSeries {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(MultiPoly::zero());
        coeffs.extend_from_slice(&self.coeffs[..self.coeffs.len() - 1]);
        RSeries {
            var: self.var,
            coeffs,
        }
    }

    fn check_var(&self, rhs: &RSeries) {
        assert_eq!(
            self.var, rhs.var,
            "series operations require matching expansion variables"
        );
    }
}

impl Add for &RSeries {
    type Output = RSeries;
    fn add(self, rhs: &RSeries) -> RSeries {
        self.check_var(rhs);
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|n| &self.coeffs[n] + &rhs.coeffs[n])
            .collect();
        RSeries {
            var: self.var,
            coeffs,
        }
    }
}

impl Sub for &RSeries {
    type Output = RSeries;
    fn sub(self, rhs: &RSeries) -> RSeries {
        self.check_var(rhs);
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|n| &self.coeffs[n] - &rhs.coeffs[n])
            .collect();
        RSeries {
            var: self.var,
            coeffs,
        }
    }
}

impl Mul for &RSeries {
    type Output = RSeries;
    /// Cauchy product truncated at the smaller order.
    fn mul(self, rhs: &RSeries) -> RSeries {
        self.check_var(rhs);
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![MultiPoly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        RSeries {
            var: self.var,
            coeffs,
        }
    }
}

macro_rules! forward_owned_series {
    ($trait:ident, $method:ident) => {
        impl $trait for RSeries {
            type Output = RSeries;
            fn $method(self, rhs: RSeries) -> RSeries {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RSeries> for RSeries {
            type Output = RSeries;
            fn $method(self, rhs: &RSeries) -> RSeries {
                (&self).$method(rhs)
            }
        }
        impl $trait<RSeries> for &RSeries {
            type Output = RSeries;
            fn $method(self, rhs: RSeries) -> RSeries {
                self.$method(&rhs)
            }
        }
    };
}
forward_owned_series!(Add, add);
forward_owned_series!(Sub, sub);
forward_owned_series!(Mul, mul);
