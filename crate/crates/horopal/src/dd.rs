//! Double-double floating point: an unevaluated sum `hi + lo` of two `f64`
//! values with `|lo| <= ulp(hi) / 2`, giving roughly 31 significant digits.
//!
//! The type implements [`num_traits::Float`] so every generic routine in the
//! crate can run in extended precision. Points within `1e-19` of the ideal
//! boundary (the tips of very thin convex bodies) are representable here while
//! they collapse onto the unit circle in `f64`.

use core::cmp::Ordering;
use core::fmt;
use core::iter::{Product, Sum};
use core::num::FpCategory;
use core::ops::{
    Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Rem, RemAssign, Sub, SubAssign,
};
use core::str::FromStr;

use num_traits::{Float, FloatConst, FromPrimitive, Num, NumCast, One, ToPrimitive, Zero};

/// Double-double real number.
#[derive(Clone, Copy, Default, PartialEq)]
pub struct Dd {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

const PI_DD: Dd = Dd::from_parts(std::f64::consts::PI, 1.2246467991473532e-16);
const E_DD: Dd = Dd::from_parts(std::f64::consts::E, 1.4456468917292502e-16);
const LN2_DD: Dd = Dd::from_parts(std::f64::consts::LN_2, 2.3190468138462996e-17);
const LN10_DD: Dd = Dd::from_parts(std::f64::consts::LN_10, -2.1707562233822494e-16);
const SQRT2_DD: Dd = Dd::from_parts(std::f64::consts::SQRT_2, -9.667293313452913e-17);

impl Dd {
    pub const ZERO: Dd = Dd::from_parts(0.0, 0.0);
    pub const ONE: Dd = Dd::from_parts(1.0, 0.0);
    /// Unit roundoff of the representation, `2^-104`.
    pub const EPSILON: Dd = Dd::from_parts(4.930380657631324e-32, 0.0);

    /// Builds a value from components that are already normalized.
    pub const fn from_parts(hi: f64, lo: f64) -> Self {
        Dd { hi, lo }
    }

    /// Exact conversion from an `f64`.
    pub const fn of(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    /// Builds a value from an arbitrary pair, renormalizing.
    pub fn new(hi: f64, lo: f64) -> Self {
        let (h, l) = two_sum(hi, lo);
        Dd { hi: h, lo: l }
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    #[inline]
    fn special(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    fn mul_f64(self, b: f64) -> Self {
        let (p1, p2) = two_prod(self.hi, b);
        if !p1.is_finite() {
            return Dd::special(p1);
        }
        let (h, l) = quick_two_sum(p1, p2 + self.lo * b);
        Dd { hi: h, lo: l }
    }

    #[inline]
    fn sqr(self) -> Self {
        self * self
    }

    /// Multiplies by `2^k` exactly.
    fn ldexp(self, k: i32) -> Self {
        let mut out = self;
        let mut k = k;
        while k != 0 {
            let step = k.clamp(-1000, 1000);
            let f = 2f64.powi(step);
            out = Dd { hi: out.hi * f, lo: out.lo * f };
            k -= step;
        }
        out
    }

    /// `exp(r) - 1` for `|r|` below about `1e-3`, by its Taylor series.
    fn expm1_small(r: Dd) -> Dd {
        let mut term = r;
        let mut sum = r;
        for n in 2..40 {
            term = term * r / Dd::of(n as f64);
            sum += term;
            if term.hi.abs() <= 1e-36 * sum.hi.abs() {
                break;
            }
        }
        sum
    }

    /// `exp(x) - 1` through `2^10` fold argument reduction; repeated squaring
    /// uses `(1 + s)^2 - 1 = s (s + 2)` so small results keep full precision.
    fn expm1_reduced(x: Dd) -> Dd {
        let mut s = Dd::expm1_small(x.ldexp(-10));
        for _ in 0..10 {
            s = s * (s + Dd::of(2.0));
        }
        s
    }

    fn sin_cos_taylor(r: Dd) -> (Dd, Dd) {
        let r2 = r.sqr();
        let mut s = r;
        let mut term = r;
        let mut n = 1.0;
        loop {
            term = -term * r2 / Dd::of((n + 1.0) * (n + 2.0));
            s += term;
            n += 2.0;
            if term.hi.abs() <= 1e-35 * s.hi.abs().max(1e-300) || n > 60.0 {
                break;
            }
        }
        let mut c = Dd::ONE;
        let mut term = Dd::ONE;
        let mut n = 0.0;
        loop {
            term = -term * r2 / Dd::of((n + 1.0) * (n + 2.0));
            c += term;
            n += 2.0;
            if term.hi.abs() <= 1e-35 || n > 60.0 {
                break;
            }
        }
        (s, c)
    }

    /// Scientific notation with `digits` significant digits.
    pub fn to_sci_string(self, digits: usize) -> String {
        if self.is_nan() {
            return "NaN".into();
        }
        if self.is_infinite() {
            return if self.hi > 0.0 { "inf".into() } else { "-inf".into() };
        }
        let digits = digits.max(1);
        if self.hi == 0.0 {
            return format!("{:.*}e0", digits - 1, 0.0);
        }
        let neg = self.hi < 0.0;
        let x = self.abs();
        let mut e = x.hi.log10().floor() as i32;
        let mut y = x / Dd::of(10.0).powi(e);
        if y >= Dd::of(10.0) {
            y /= Dd::of(10.0);
            e += 1;
        } else if y < Dd::ONE {
            y *= Dd::of(10.0);
            e -= 1;
        }
        y += Dd::of(5.0) * Dd::of(10.0).powi(-(digits as i32));
        if y >= Dd::of(10.0) {
            y /= Dd::of(10.0);
            e += 1;
        }
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        for i in 0..digits {
            let d = y.hi.floor().clamp(0.0, 9.0);
            out.push(char::from(b'0' + d as u8));
            if i == 0 && digits > 1 {
                out.push('.');
            }
            y = (y - Dd::of(d)) * Dd::of(10.0);
        }
        out.push_str(&format!("e{e}"));
        out
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }
}

impl From<f32> for Dd {
    fn from(x: f32) -> Self {
        Dd { hi: x as f64, lo: 0.0 }
    }
}

impl fmt::Debug for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dd({})", self.to_sci_string(32))
    }
}

impl fmt::Display for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().map(|p| p + 1).unwrap_or(32);
        f.pad(&self.to_sci_string(digits))
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            o => o,
        }
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, b: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, b.hi);
        if !s1.is_finite() {
            return Dd::special(s1);
        }
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (h, l) = quick_two_sum(s1, s2 + t2);
        Dd { hi: h, lo: l }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, b: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, b.hi);
        if !p1.is_finite() {
            return Dd::special(p1);
        }
        let (h, l) = quick_two_sum(p1, p2 + (self.hi * b.lo + self.lo * b.hi));
        Dd { hi: h, lo: l }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        if !q1.is_finite() || b.hi == 0.0 {
            return Dd::special(q1);
        }
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (h, l) = quick_two_sum(q1, q2);
        Dd { hi: h, lo: l } + Dd::of(q3)
    }
}

impl Rem for Dd {
    type Output = Dd;
    fn rem(self, b: Dd) -> Dd {
        self - (self / b).trunc() * b
    }
}

macro_rules! assign_ops {
    ($($tr:ident $m:ident $op:tt),*) => {$(
        impl $tr for Dd {
            fn $m(&mut self, b: Dd) {
                *self = *self $op b;
            }
        }
    )*};
}
assign_ops!(AddAssign add_assign +, SubAssign sub_assign -, MulAssign mul_assign *,
            DivAssign div_assign /, RemAssign rem_assign %);

impl Sum for Dd {
    fn sum<I: Iterator<Item = Dd>>(iter: I) -> Dd {
        iter.fold(Dd::ZERO, |a, b| a + b)
    }
}

impl Product for Dd {
    fn product<I: Iterator<Item = Dd>>(iter: I) -> Dd {
        iter.fold(Dd::ONE, |a, b| a * b)
    }
}

impl Zero for Dd {
    fn zero() -> Self {
        Dd::ZERO
    }
    fn is_zero(&self) -> bool {
        self.hi == 0.0
    }
}

impl One for Dd {
    fn one() -> Self {
        Dd::ONE
    }
}

/// Error returned when parsing a [`Dd`] from text fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDdError;

impl fmt::Display for ParseDdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("invalid double-double literal")
    }
}

impl std::error::Error for ParseDdError {}

impl FromStr for Dd {
    type Err = ParseDdError;

    /// Decimal literals are parsed digit by digit so that values such as
    /// `0.1` are accurate to the full double-double precision.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let (mantissa, exp) = match body.find(['e', 'E']) {
            Some(i) => (&body[..i], body[i + 1..].parse::<i32>().map_err(|_| ParseDdError)?),
            None => (body, 0),
        };
        let (int_part, frac_part) = match mantissa.find('.') {
            Some(i) => (&mantissa[..i], &mantissa[i + 1..]),
            None => (mantissa, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(ParseDdError);
        }
        let ten = Dd::of(10.0);
        let mut acc = Dd::ZERO;
        for c in int_part.chars().chain(frac_part.chars()) {
            let d = c.to_digit(10).ok_or(ParseDdError)?;
            acc = acc * ten + Dd::of(d as f64);
        }
        let scale = exp - frac_part.len() as i32;
        let v = if scale >= 0 { acc * ten.powi(scale) } else { acc / ten.powi(-scale) };
        Ok(if neg { -v } else { v })
    }
}

impl Num for Dd {
    type FromStrRadixErr = ParseDdError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        if radix != 10 {
            return Err(ParseDdError);
        }
        s.parse()
    }
}

impl ToPrimitive for Dd {
    fn to_i64(&self) -> Option<i64> {
        let t = self.trunc();
        let v = t.hi as i128 + t.lo as i128;
        i64::try_from(v).ok()
    }
    fn to_u64(&self) -> Option<u64> {
        let t = self.trunc();
        let v = t.hi as i128 + t.lo as i128;
        u64::try_from(v).ok()
    }
    fn to_f64(&self) -> Option<f64> {
        Some(self.hi + self.lo)
    }
    fn to_f32(&self) -> Option<f32> {
        Some((self.hi + self.lo) as f32)
    }
}

impl FromPrimitive for Dd {
    fn from_i64(n: i64) -> Option<Self> {
        let hi = n as f64;
        let lo = (n as i128 - hi as i128) as f64;
        Some(Dd::new(hi, lo))
    }
    fn from_u64(n: u64) -> Option<Self> {
        let hi = n as f64;
        let lo = (n as i128 - hi as i128) as f64;
        Some(Dd::new(hi, lo))
    }
    fn from_f64(x: f64) -> Option<Self> {
        Some(Dd::of(x))
    }
    fn from_f32(x: f32) -> Option<Self> {
        Some(Dd::of(x as f64))
    }
}

impl NumCast for Dd {
    fn from<N: ToPrimitive>(n: N) -> Option<Self> {
        n.to_f64().map(Dd::of)
    }
}

impl FloatConst for Dd {
    fn E() -> Self {
        E_DD
    }
    fn FRAC_1_PI() -> Self {
        Dd::ONE / PI_DD
    }
    fn FRAC_1_SQRT_2() -> Self {
        SQRT2_DD.ldexp(-1)
    }
    fn FRAC_2_PI() -> Self {
        Dd::of(2.0) / PI_DD
    }
    fn FRAC_2_SQRT_PI() -> Self {
        Dd::of(2.0) / PI_DD.sqrt()
    }
    fn FRAC_PI_2() -> Self {
        PI_DD.ldexp(-1)
    }
    fn FRAC_PI_3() -> Self {
        PI_DD / Dd::of(3.0)
    }
    fn FRAC_PI_4() -> Self {
        PI_DD.ldexp(-2)
    }
    fn FRAC_PI_6() -> Self {
        PI_DD / Dd::of(6.0)
    }
    fn FRAC_PI_8() -> Self {
        PI_DD.ldexp(-3)
    }
    fn LN_10() -> Self {
        LN10_DD
    }
    fn LN_2() -> Self {
        LN2_DD
    }
    fn LOG10_E() -> Self {
        Dd::ONE / LN10_DD
    }
    fn LOG2_E() -> Self {
        Dd::ONE / LN2_DD
    }
    fn PI() -> Self {
        PI_DD
    }
    fn SQRT_2() -> Self {
        SQRT2_DD
    }
    fn TAU() -> Self {
        PI_DD.ldexp(1)
    }
    fn LOG10_2() -> Self {
        LN2_DD / LN10_DD
    }
    fn LOG2_10() -> Self {
        LN10_DD / LN2_DD
    }
}

impl Float for Dd {
    fn nan() -> Self {
        Dd::special(f64::NAN)
    }
    fn infinity() -> Self {
        Dd::special(f64::INFINITY)
    }
    fn neg_infinity() -> Self {
        Dd::special(f64::NEG_INFINITY)
    }
    fn neg_zero() -> Self {
        Dd::special(-0.0)
    }
    fn min_value() -> Self {
        Dd::special(f64::MIN)
    }
    fn min_positive_value() -> Self {
        Dd::special(f64::MIN_POSITIVE)
    }
    fn max_value() -> Self {
        Dd::special(f64::MAX)
    }
    fn epsilon() -> Self {
        Dd::EPSILON
    }
    fn is_nan(self) -> bool {
        self.hi.is_nan() || self.lo.is_nan()
    }
    fn is_infinite(self) -> bool {
        self.hi.is_infinite()
    }
    fn is_finite(self) -> bool {
        self.hi.is_finite()
    }
    fn is_normal(self) -> bool {
        self.hi.is_normal()
    }
    fn classify(self) -> FpCategory {
        self.hi.classify()
    }
    fn floor(self) -> Self {
        let f = self.hi.floor();
        if f != self.hi {
            Dd::of(f)
        } else {
            let (h, l) = quick_two_sum(f, self.lo.floor());
            Dd { hi: h, lo: l }
        }
    }
    fn ceil(self) -> Self {
        let c = self.hi.ceil();
        if c != self.hi {
            Dd::of(c)
        } else {
            let (h, l) = quick_two_sum(c, self.lo.ceil());
            Dd { hi: h, lo: l }
        }
    }
    fn round(self) -> Self {
        if self.hi >= 0.0 {
            (self + Dd::of(0.5)).floor()
        } else {
            -((-self) + Dd::of(0.5)).floor()
        }
    }
    fn trunc(self) -> Self {
        if self.hi >= 0.0 {
            self.floor()
        } else {
            self.ceil()
        }
    }
    fn fract(self) -> Self {
        self - self.trunc()
    }
    fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }
    fn signum(self) -> Self {
        if self.is_nan() {
            Dd::nan()
        } else if self.is_sign_negative() {
            -Dd::ONE
        } else {
            Dd::ONE
        }
    }
    fn is_sign_positive(self) -> bool {
        !self.is_sign_negative()
    }
    fn is_sign_negative(self) -> bool {
        self.hi < 0.0 || (self.hi == 0.0 && self.hi.is_sign_negative())
    }
    fn mul_add(self, a: Self, b: Self) -> Self {
        self * a + b
    }
    fn recip(self) -> Self {
        Dd::ONE / self
    }
    fn powi(self, n: i32) -> Self {
        let mut base = self;
        let mut e = n.unsigned_abs();
        let mut acc = Dd::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base.sqr();
            e >>= 1;
        }
        if n < 0 {
            acc.recip()
        } else {
            acc
        }
    }
    fn powf(self, n: Self) -> Self {
        if n.is_zero() {
            return Dd::ONE;
        }
        if self.is_zero() {
            return if n.hi > 0.0 { Dd::ZERO } else { Dd::infinity() };
        }
        if self.hi < 0.0 {
            if n.fract().is_zero() && n.abs().hi < 2.0e9 {
                return self.powi(n.hi as i32);
            }
            return Dd::nan();
        }
        (n * self.ln()).exp()
    }
    fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return if self.hi == 0.0 { Dd::ZERO } else { Dd::nan() };
        }
        if self.hi.is_infinite() {
            return self;
        }
        let x = self.hi.sqrt();
        let y = Dd::of(x);
        y + (self - y.sqr()).mul_f64(0.5 / x)
    }
    fn exp(self) -> Self {
        if self.is_nan() {
            return self;
        }
        if self.hi > 709.78 {
            return Dd::infinity();
        }
        if self.hi < -745.2 {
            return Dd::ZERO;
        }
        let k = (self.hi / LN2_DD.hi).round();
        let r = self - LN2_DD.mul_f64(k);
        (Dd::expm1_reduced(r) + Dd::ONE).ldexp(k as i32)
    }
    fn exp2(self) -> Self {
        (self * LN2_DD).exp()
    }
    fn ln(self) -> Self {
        if self.is_nan() || self.hi < 0.0 {
            return Dd::nan();
        }
        if self.hi == 0.0 {
            return Dd::neg_infinity();
        }
        if self.hi.is_infinite() {
            return self;
        }
        let y = Dd::of(self.hi.ln());
        y + self * (-y).exp() - Dd::ONE
    }
    fn log(self, base: Self) -> Self {
        self.ln() / base.ln()
    }
    fn log2(self) -> Self {
        self.ln() / LN2_DD
    }
    fn log10(self) -> Self {
        self.ln() / LN10_DD
    }
    fn max(self, other: Self) -> Self {
        if self.is_nan() {
            other
        } else if other.is_nan() || self >= other {
            self
        } else {
            other
        }
    }
    fn min(self, other: Self) -> Self {
        if self.is_nan() {
            other
        } else if other.is_nan() || self <= other {
            self
        } else {
            other
        }
    }
    #[allow(deprecated)]
    fn abs_sub(self, other: Self) -> Self {
        if self <= other {
            Dd::ZERO
        } else {
            self - other
        }
    }
    fn cbrt(self) -> Self {
        if self.is_zero() || !self.is_finite() {
            return self;
        }
        let y = Dd::of(self.hi.cbrt());
        // one Newton step on y^3 = x
        y - (y * y * y - self) / (Dd::of(3.0) * y * y)
    }
    fn hypot(self, other: Self) -> Self {
        let a = self.abs();
        let b = other.abs();
        let (big, small) = if a >= b { (a, b) } else { (b, a) };
        if big.is_zero() {
            return Dd::ZERO;
        }
        let t = small / big;
        big * (Dd::ONE + t * t).sqrt()
    }
    fn sin(self) -> Self {
        self.sin_cos().0
    }
    fn cos(self) -> Self {
        self.sin_cos().1
    }
    fn tan(self) -> Self {
        let (s, c) = self.sin_cos();
        s / c
    }
    fn asin(self) -> Self {
        if self.abs() > Dd::ONE {
            return Dd::nan();
        }
        self.atan2(((Dd::ONE - self) * (Dd::ONE + self)).sqrt())
    }
    fn acos(self) -> Self {
        if self.abs() > Dd::ONE {
            return Dd::nan();
        }
        ((Dd::ONE - self) * (Dd::ONE + self)).sqrt().atan2(self)
    }
    fn atan(self) -> Self {
        if self.is_nan() {
            return self;
        }
        if self.hi.is_infinite() {
            return Dd::FRAC_PI_2() * self.signum();
        }
        let y0 = Dd::of(self.hi.atan());
        let (s, c) = y0.sin_cos();
        y0 + c * (self * c - s)
    }
    fn atan2(self, other: Self) -> Self {
        let (y, x) = (self, other);
        if y.is_zero() && x.is_zero() {
            return if x.is_sign_negative() { PI_DD * y.signum() } else { y };
        }
        if y.is_nan() || x.is_nan() {
            return Dd::nan();
        }
        let t0 = Dd::of(y.hi.atan2(x.hi));
        let (s, c) = t0.sin_cos();
        t0 + (y * c - x * s) / (x * c + y * s)
    }
    fn sin_cos(self) -> (Self, Self) {
        if !self.is_finite() {
            return (Dd::nan(), Dd::nan());
        }
        let half_pi = PI_DD.ldexp(-1);
        let k = (self.hi / half_pi.hi).round();
        let r = self - half_pi * Dd::of(k);
        let (s, c) = Dd::sin_cos_taylor(r);
        match (k as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }
    fn exp_m1(self) -> Self {
        if self.hi.abs() < 0.5 {
            Dd::expm1_reduced(self)
        } else {
            self.exp() - Dd::ONE
        }
    }
    fn ln_1p(self) -> Self {
        if self.hi.abs() > 0.25 || !self.is_finite() {
            return (Dd::ONE + self).ln();
        }
        let y = Dd::of(self.hi.ln_1p());
        let em = (-y).exp_m1();
        y + (self + em + self * em)
    }
    fn sinh(self) -> Self {
        if self.hi.abs() < 0.5 {
            let em = self.exp_m1();
            (em + em / (em + Dd::ONE)).ldexp(-1)
        } else {
            let e = self.exp();
            (e - e.recip()).ldexp(-1)
        }
    }
    fn cosh(self) -> Self {
        let e = self.abs().exp();
        (e + e.recip()).ldexp(-1)
    }
    fn tanh(self) -> Self {
        if self.hi.abs() > 40.0 {
            let e = (-self.abs().ldexp(1)).exp();
            let t = (Dd::ONE - e) / (Dd::ONE + e);
            return if self.hi > 0.0 { t } else { -t };
        }
        let em = self.ldexp(1).exp_m1();
        em / (em + Dd::of(2.0))
    }
    fn asinh(self) -> Self {
        let a = self.abs();
        let v = if a.hi > 1e100 {
            a.ln() + LN2_DD
        } else {
            let a2 = a * a;
            (a + a2 / (Dd::ONE + (Dd::ONE + a2).sqrt())).ln_1p()
        };
        if self.is_sign_negative() {
            -v
        } else {
            v
        }
    }
    fn acosh(self) -> Self {
        if self < Dd::ONE {
            return Dd::nan();
        }
        let t = self - Dd::ONE;
        (t + (t * (self + Dd::ONE)).sqrt()).ln_1p()
    }
    fn atanh(self) -> Self {
        if self.abs() > Dd::ONE {
            return Dd::nan();
        }
        (self.ldexp(1) / (Dd::ONE - self)).ln_1p().ldexp(-1)
    }
    fn integer_decode(self) -> (u64, i16, i8) {
        self.hi.integer_decode()
    }
}
