//! Exact rational oracles: the explicit non-recurrent expression of the upwind
//! error and the binomial closed form of the manufactured scheme.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{invalid, Error, Result};

pub type Rational = BigRational;

/// Largest `n` accepted by [`upwind_explicit`].
pub const EXPLICIT_MAX_N: usize = 20;
/// Largest index accepted by [`beta_coeffs`].
pub const BETA_MAX_R: usize = 40;

/// Parses `p/q`, an integer, or a finite decimal such as `-0.75`, exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || invalid(format!("`{s}` is not a rational number"));
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    let (mantissa, exp) = match t.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int.trim_start_matches(['-', '+']).is_empty() && frac.is_empty() {
        return Err(bad());
    }
    let digits = format!("{int}{frac}");
    let digits = if digits == "-" || digits == "+" { format!("{digits}0") } else { digits };
    let num: BigInt = digits.parse().map_err(|_| bad())?;
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    Ok(if scale >= 0 {
        Rational::from_integer(num * ten.pow(scale as u32))
    } else {
        Rational::new(num, ten.pow((-scale) as u32))
    })
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn int(k: i64) -> Rational {
    Rational::from_integer(BigInt::from(k))
}

/// Generalized binomial coefficient `(x choose p)`.
pub fn binomial(x: &Rational, p: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 0..p {
        acc = acc * (x - int(i as i64)) / int(i as i64 + 1);
    }
    acc
}

fn pow(x: &Rational, e: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

#[derive(Clone, Debug, PartialEq)]
pub struct BetaSequence {
    pub courant: Rational,
    /// `values[r - 1] = beta_r`.
    pub values: Vec<Rational>,
}

impl BetaSequence {
    /// `beta_r` for `r >= 1`.
    pub fn get(&self, r: usize) -> &Rational {
        &self.values[r - 1]
    }
}

/// `beta_1 ..= beta_{r_max}` of the upwind boundary.
pub fn beta_coeffs(courant: &Rational, r_max: usize) -> Result<BetaSequence> {
    if r_max > BETA_MAX_R {
        return Err(Error::OutOfRange(format!("r_max <= {BETA_MAX_R} (got {r_max})")));
    }
    let c = courant;
    let q = int(2) * (int(2) * c * c - int(1));
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    let mut values = Vec::with_capacity(r_max);
    for idx in 1..=r_max {
        let v = match idx {
            1 => int(1) + c,
            2 => -(c * c),
            i if i % 2 == 1 => Rational::zero(),
            i => {
                let r = i / 2;
                let mut s = Rational::zero();
                for p in r.div_ceil(2)..=r {
                    s += binomial(&half, p) * binomial(&int(p as i64), r - p) * pow(&q, 2 * p - r);
                }
                -half.clone() * s
            }
        };
        values.push(v);
    }
    Ok(BetaSequence { courant: c.clone(), values })
}

/// `sum_{r >= 0} sum_{a_1 + ... + a_r = m} beta_{a_1} ... beta_{a_r}` for `m = 0..=m_max`:
/// the coefficients of `1 / (1 - B(x))`, `B(x) = sum beta_a x^a`. The empty composition gives `1` at `m = 0`.
fn composition_sums(beta: &BetaSequence, m_max: usize) -> Vec<Rational> {
    let mut c = vec![Rational::one()];
    for m in 1..=m_max {
        let mut s = Rational::zero();
        for a in 1..=m {
            s += beta.get(a) * &c[m - a];
        }
        c.push(s);
    }
    c
}

/// `eps_j^n` for the leap-frog bulk with the upwind boundary, from the explicit formula.
pub fn upwind_explicit(courant: &Rational, n: usize, j: usize) -> Result<Rational> {
    if !(2..=EXPLICIT_MAX_N).contains(&n) || j > n {
        return Err(Error::OutOfRange(format!(
            "explicit expression supports 2 <= n <= {EXPLICIT_MAX_N}, 0 <= j <= n (got n = {n}, j = {j})"
        )));
    }
    if courant.is_zero() || courant.abs() >= int(1) {
        return Err(invalid("explicit expression needs 0 < |C| < 1"));
    }
    let c = courant;
    let m_max = n + j - 1;
    let beta = beta_coeffs(c, m_max.max(2))?;
    let comps = composition_sums(&beta, m_max);
    let q = int(2) * (int(2) * c * c - int(1));
    let scale = pow(&(int(2) * c), j).recip();
    let sign = |e: usize| if e % 2 == 0 { int(1) } else { int(-1) };

    let mut total = Rational::zero();
    for k in j..=(n + j - 1) / 2 {
        let mut a = Rational::zero();
        for l in 0..=j {
            let lh = Rational::new(BigInt::from(l), BigInt::from(2));
            for s in 0..=j - l {
                let ks = k - s;
                let pre = sign(j - l - s) * binomial(&int(j as i64), l) * binomial(&int((j - l) as i64), s);
                for p in ks.div_ceil(2)..=ks {
                    a += &pre * binomial(&lh, p) * binomial(&int(p as i64), ks - p) * pow(&q, 2 * p - ks);
                }
            }
        }
        total += a * &comps[n + j - 2 * k - 1];
    }
    Ok(total * scale)
}

/// Manufactured scheme with homogeneous Dirichlet boundary:
/// `eps_j^n = C binom(n-2, j-1) C^{j-1} (1 - C)^{n-1-j}` for `n >= 2`, `1 <= j <= n - 1`; zero elsewhere.
pub fn manufactured_closed_form(courant: &Rational, n: usize, j: usize) -> Rational {
    if n < 2 || j == 0 || j > n - 1 {
        return if n == 1 && j == 0 { Rational::one() } else { Rational::zero() };
    }
    let c = courant;
    c * binomial(&int(n as i64 - 2), j - 1) * pow(c, j - 1) * pow(&(int(1) - c), n - 1 - j)
}

/// Floating-point evaluation of [`manufactured_closed_form`].
pub fn manufactured_closed_form_f64(courant: f64, n: usize, j: usize) -> f64 {
    if n < 2 || j == 0 || j > n - 1 {
        return if n == 1 && j == 0 { 1.0 } else { 0.0 };
    }
    let mut binom = 1.0;
    for i in 0..j - 1 {
        binom = binom * (n - 2 - i) as f64 / (i + 1) as f64;
    }
    courant * binom * courant.powi(j as i32 - 1) * (1.0 - courant).powi((n - 1 - j) as i32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(r("-1/2"), r("-0.5"));
        assert_eq!(r("3/4"), r("0.75"));
        assert_eq!(r("1e-2"), r("1/100"));
        assert_eq!(r("2"), int(2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("-").is_err());
    }

    #[test]
    fn first_betas() {
        let c = r("-1/2");
        let b = beta_coeffs(&c, 8).unwrap();
        assert_eq!(b.get(1), &(int(1) + &c));
        assert_eq!(b.get(2), &-(&c * &c));
        assert_eq!(b.get(3), &Rational::zero());
        assert_eq!(b.get(5), &Rational::zero());
    }

    #[test]
    fn generalized_binomial() {
        let half = r("1/2");
        assert_eq!(binomial(&half, 2), r("-1/8"));
        assert_eq!(binomial(&int(5), 2), int(10));
        assert_eq!(binomial(&int(2), 3), Rational::zero());
    }

    #[test]
    fn manufactured_example() {
        assert_eq!(manufactured_closed_form(&r("1/2"), 4, 2), r("1/4"));
        assert_eq!(manufactured_closed_form_f64(0.5, 4, 2), 0.25);
    }
}
