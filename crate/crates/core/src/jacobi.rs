//! Maclaurin coefficient polynomials of sn(u) and sn^2(u).
//!
//! sn(u) = sum_{n>=0} q_{2n+1}(x) (-1)^n u^{2n+1} / (2n+1)! with
//! q_{2n+1} an integer-coefficient palindromic polynomial of degree n, and
//! sn^2(u) = sum_{n>=0} Q_{2n+2}(x) (-1)^n u^{2n+2} / (2n+2)!.
//!
//! The q table is generated by solving y'' = -(1+x) y + 2x y^3 term by term
//! over Q[x] with y = sum c_{2n+1} u^{2n+1}, c_1 = 1, and rescaling
//! q_{2n+1} = (-1)^n (2n+1)! c_{2n+1}. The symmetry, integrality and
//! boundary properties are checked at generation time.

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, BigRational};
use crate::poly::Poly;
use std::sync::{Mutex, OnceLock};

/// Table of q_{2n+1}(x) for n = 0..=max_index.
#[derive(Clone, Debug)]
pub struct SnCoeffTable {
    q_polys: Vec<Poly<BigRational>>,
}

impl SnCoeffTable {
    pub fn max_index(&self) -> usize {
        self.q_polys.len() - 1
    }

    /// q_{2n+1}(x).
    pub fn q(&self, n: usize) -> &Poly<BigRational> {
        &self.q_polys[n]
    }

    pub fn q_polys(&self) -> &[Poly<BigRational>] {
        &self.q_polys
    }
}

/// Table of Q_{2n+2}(x) for n = 0..=max_index.
#[derive(Clone, Debug)]
pub struct SnSquaredTable {
    q_polys: Vec<Poly<BigRational>>,
}

impl SnSquaredTable {
    pub fn max_index(&self) -> usize {
        self.q_polys.len() - 1
    }

    /// Q_{2n+2}(x).
    pub fn q(&self, n: usize) -> &Poly<BigRational> {
        &self.q_polys[n]
    }
}

fn sn_cache() -> &'static Mutex<Vec<Poly<BigRational>>> {
    static CACHE: OnceLock<Mutex<Vec<Poly<BigRational>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(Vec::new()))
}

/// Runs `f` on the q-polynomial slice q_{1}, q_{3}, ..., q_{2 n_max + 1}.
/// Tables are grown once and reused across calls.
pub(crate) fn with_q_polys<T>(n_max: usize, f: impl FnOnce(&[Poly<BigRational>]) -> T) -> T {
    let mut cache = sn_cache().lock().expect("sn table lock poisoned");
    if cache.len() <= n_max {
        extend_q_table(&mut cache, n_max);
    }
    f(&cache[..=n_max])
}

fn extend_q_table(qs: &mut Vec<Poly<BigRational>>, n_max: usize) {
    // Series coefficients c_{2n+1} of the sn ODE solution, kept alongside
    // their pairwise products to make the cubic term a single convolution.
    let mut c: Vec<Poly<BigRational>> = vec![Poly::one()];
    let mut d: Vec<Poly<BigRational>> = Vec::new(); // d[k] = sum_{i+j=k} c_i c_j
    let one_plus_x = Poly::from_i64(&[1, 1]);
    let two_x = Poly::from_i64(&[0, 2]);

    for n in 0..n_max {
        let k = c.len() - 1; // == n
        d.push(
            (0..=k)
                .fold(Poly::zero(), |acc, i| acc.add(&c[i].mul(&c[k - i]))),
        );
        // cube[n-1] = coefficient of u^{2n+1} in y^3
        let cube = if n == 0 {
            Poly::zero()
        } else {
            (0..n).fold(Poly::zero(), |acc, i| acc.add(&d[i].mul(&c[n - 1 - i])))
        };
        let num = two_x.mul(&cube).sub(&one_plus_x.mul(&c[n]));
        let den = BigRational::from_int(((2 * n + 3) * (2 * n + 2)) as i64);
        c.push(num.scale(&den.recip()));
    }

    qs.clear();
    for (n, cn) in c.iter().enumerate() {
        let scale = BigRational::from_integer(factorial(2 * n as u32 + 1));
        let signed = if n % 2 == 0 { scale } else { -scale };
        let q = cn.scale(&signed);
        validate_q(&q, n);
        qs.push(q);
    }
}

fn validate_q(q: &Poly<BigRational>, n: usize) {
    assert_eq!(q.degree(), Some(n), "q_{} must have degree {n}", 2 * n + 1);
    assert!(
        q.coeffs().iter().all(|a| a.is_integer()),
        "q_{} must have integer coefficients",
        2 * n + 1
    );
    assert!(q.is_palindromic(), "q_{} must be palindromic", 2 * n + 1);
    assert_eq!(
        q.coeff(0),
        BigRational::one(),
        "q_{}(0) must be 1",
        2 * n + 1
    );
}

/// Builds the table of q_{2n+1}(x) for n = 0..=n_max.
pub fn sn_maclaurin(n_max: usize) -> SnCoeffTable {
    with_q_polys(n_max, |qs| SnCoeffTable {
        q_polys: qs.to_vec(),
    })
}

/// Q_{2p-2}(x) = sum_j C(2p-2, 2j+1) q_{2j+1}(x) q_{2p-2j-3}(x), for p >= 2.
pub fn sn_squared_coeffs(p: usize) -> Result<Poly<BigRational>> {
    if p < 2 {
        return Err(Error::Domain(format!(
            "sn_squared_coeffs requires p >= 2, got {p}"
        )));
    }
    // n = p-2 in the sn^2 convolution for the u^{2n+2} coefficient
    let n = p - 2;
    let q = with_q_polys(n, |qs| {
        let mut acc = Poly::zero();
        for j in 0..=n {
            let w = BigRational::from_integer(binomial(2 * n as u32 + 2, 2 * j as u32 + 1));
            acc = acc.add(&qs[j].mul(&qs[n - j]).scale(&w));
        }
        acc
    });
    if n > 0 {
        debug_assert_eq!(q.degree(), Some(n));
    }
    debug_assert!(q.is_palindromic());
    Ok(q)
}

/// Builds the table of Q_{2n+2}(x) for n = 0..=n_max (i.e. p = n + 2).
pub fn sn_squared_table(n_max: usize) -> Result<SnSquaredTable> {
    let q_polys = (0..=n_max)
        .map(|n| sn_squared_coeffs(n + 2))
        .collect::<Result<Vec<_>>>()?;
    Ok(SnSquaredTable { q_polys })
}
