use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::numkit::GaussianRational;
use crate::weyl::{ASeries, NormalSeries};

/// Parameters a realization was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealizationParams {
    /// `A2 = T V(A) + B T W(A)`, `A3 = T W(A)`.
    TwoRel { v: ASeries, w: ASeries },
    /// `W = c e^phi`, `V = c E(phi) (e^phi psi - phi'/2)`.
    ThreeRel {
        c: GaussianRational,
        phi: ASeries,
        psi: ASeries,
    },
}

/// `A1 = A` together with series `A2`, `A3` exact to `window`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    pub a1: NormalSeries,
    pub a2: NormalSeries,
    pub a3: NormalSeries,
    pub params: RealizationParams,
    pub window: usize,
}

fn require_window(what: &str, have: usize, need: usize) -> Result<()> {
    if have < need {
        return Err(Error::WindowUnderflow(format!(
            "{what} is exact to degree {have}, need {need}"
        )));
    }
    Ok(())
}

/// `A2 = T V(A) + B T W(A)`, `A3 = T W(A)`: the general solution of the
/// first two relations.
pub fn build_two_rel(v: &ASeries, w: &ASeries, window: usize) -> Result<Realization> {
    require_window("V", v.window(), window)?;
    require_window("W", w.window(), window)?;
    let t = NormalSeries::t_series(window);
    let tv = t.mul(&NormalSeries::lift_a_series(&v.restrict(window)))?;
    let tw = t.mul(&NormalSeries::lift_a_series(&w.restrict(window)))?;
    Ok(Realization {
        a1: NormalSeries::a(window),
        a2: tv.add(&tw.b_mul()),
        a3: tw,
        params: RealizationParams::TwoRel {
            v: v.clone(),
            w: w.clone(),
        },
        window,
    })
}

/// `(V, W)` for the three-relation family, exact to `window`.
fn three_rel_coefficients(
    c: &GaussianRational,
    phi: &ASeries,
    psi: &ASeries,
    window: usize,
) -> Result<(ASeries, ASeries)> {
    require_window("phi", phi.window(), window + 1)?;
    require_window("psi", psi.window(), window)?;
    let phi_prime = phi.derivative()?.restrict(window);
    let phi = phi.restrict(window);
    let psi = psi.restrict(window);
    let e_phi = ASeries::a_exp(&phi)?;
    let bracket = e_phi
        .mul(&psi)
        .sub(&phi_prime.scale(&GaussianRational::from_ratio(1, 2)));
    let v = ASeries::euler_e(&phi)?.mul(&bracket).scale(c);
    let w = e_phi.scale(c);
    Ok((v, w))
}

fn check_three_rel_inputs(c: &GaussianRational, phi: &ASeries, psi: &ASeries) -> Result<(ASeries, ASeries)> {
    if c.is_zero() {
        return Err(Error::ZeroConstant);
    }
    Ok((phi.clone().into_odd()?, psi.clone().into_odd()?))
}

/// The solution of all three relations with `A3 = c T e^{phi(A)}` and
/// `A2 = c T E(phi)[e^phi psi - phi'/2] + c B T e^phi`.
///
/// `phi` and `psi` must be odd and `c` nonzero. `phi` must be exact one
/// degree past `window` because of `phi'`.
pub fn build_three_rel(
    c: &GaussianRational,
    phi: &ASeries,
    psi: &ASeries,
    window: usize,
) -> Result<Realization> {
    let (phi, psi) = check_three_rel_inputs(c, phi, psi)?;
    build_three_rel_unchecked(c, &phi, &psi, window)
}

/// [`build_three_rel`] without the oddness and nonzero checks. Only useful
/// for showing what goes wrong without them.
pub fn build_three_rel_unchecked(
    c: &GaussianRational,
    phi: &ASeries,
    psi: &ASeries,
    window: usize,
) -> Result<Realization> {
    let (v, w) = three_rel_coefficients(c, phi, psi, window)?;
    let mut r = build_two_rel(&v, &w, window)?;
    r.params = RealizationParams::ThreeRel {
        c: c.clone(),
        phi: phi.clone(),
        psi: psi.clone(),
    };
    Ok(r)
}

/// Same realization as [`build_three_rel`], assembled from products of
/// lifted series in the Weyl algebra instead of products in `A` alone.
pub fn build_three_rel_via_operators(
    c: &GaussianRational,
    phi: &ASeries,
    psi: &ASeries,
    window: usize,
) -> Result<Realization> {
    let (phi, psi) = check_three_rel_inputs(c, phi, psi)?;
    require_window("phi", phi.window(), window + 1)?;
    require_window("psi", psi.window(), window)?;
    let lift = |f: &ASeries| NormalSeries::lift_a_series(&f.restrict(window));
    let phi_prime = phi.derivative()?;
    let phi_w = phi.restrict(window);
    let t = NormalSeries::t_series(window);
    let exp = lift(&ASeries::a_exp(&phi_w)?);
    let euler = lift(&ASeries::euler_e(&phi_w)?);
    let bracket = exp
        .mul(&lift(&psi))?
        .sub(&lift(&phi_prime).scale(&GaussianRational::from_ratio(1, 2)));
    let t_exp = t.mul(&exp)?;
    let a2 = t
        .mul(&euler)?
        .mul(&bracket)?
        .add(&t_exp.b_mul())
        .scale(c);
    Ok(Realization {
        a1: NormalSeries::a(window),
        a2,
        a3: t_exp.scale(c),
        params: RealizationParams::ThreeRel {
            c: c.clone(),
            phi,
            psi,
        },
        window,
    })
}

impl Realization {
    /// `A1` and `A2` swapped. The relations are symmetric in the two, so a
    /// valid realization stays valid.
    pub fn exchanged(&self) -> Realization {
        Realization {
            a1: self.a2.clone(),
            a2: self.a1.clone(),
            ..self.clone()
        }
    }

    pub fn params_json(&self) -> Value {
        match &self.params {
            RealizationParams::TwoRel { v, w } => {
                json!({ "V": v.to_json(), "W": w.to_json(), "window": self.window })
            }
            RealizationParams::ThreeRel { c, phi, psi } => json!({
                "c": c.to_string(),
                "phi": phi.to_json(),
                "psi": psi.to_json(),
                "window": self.window,
            }),
        }
    }

    /// Rebuilds from the parameter file format.
    pub fn from_params_json(value: &Value) -> Result<Realization> {
        let window = value
            .get("window")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Format("realization JSON: missing \"window\"".into()))?
            as usize;
        let series = |key: &str| -> Result<ASeries> {
            ASeries::from_json(
                value
                    .get(key)
                    .ok_or_else(|| Error::Format(format!("realization JSON: missing {key:?}")))?,
            )
        };
        match value.get("c") {
            Some(c) => {
                let c: GaussianRational = c
                    .as_str()
                    .ok_or_else(|| Error::Format("realization JSON: \"c\" must be a string".into()))?
                    .parse()?;
                build_three_rel(&c, &series("phi")?, &series("psi")?, window)
            }
            None => build_two_rel(&series("V")?, &series("W")?, window),
        }
    }
}

/// Defects of the three relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residuals {
    /// `{A1,A2} - A3`
    pub r1: NormalSeries,
    /// `{A1,A3}`
    pub r2: NormalSeries,
    /// `{A2,A3}`
    pub r3: NormalSeries,
}

impl Residuals {
    pub fn all_zero(&self) -> bool {
        self.r1.is_zero() && self.r2.is_zero() && self.r3.is_zero()
    }

    pub fn first_two_zero(&self) -> bool {
        self.r1.is_zero() && self.r2.is_zero()
    }

    pub fn to_json(&self) -> Value {
        json!({ "r1": self.r1.to_json(), "r2": self.r2.to_json(), "r3": self.r3.to_json() })
    }
}

/// Residual series of the three relations, each exact on its own window.
pub fn relation_residuals(a1: &NormalSeries, a2: &NormalSeries, a3: &NormalSeries) -> Result<Residuals> {
    Ok(Residuals {
        r1: a1.anticommutator(a2)?.sub(a3),
        r2: a1.anticommutator(a3)?,
        r3: a2.anticommutator(a3)?,
    })
}

pub fn verify_relations(r: &Realization) -> Result<Residuals> {
    relation_residuals(&r.a1, &r.a2, &r.a3)
}

/// Closed forms of `A2 A3` and `A3^2` built from the parameters alone:
///
/// * two relations: `V(-A)W(A) + B W(-A)W(A)` and `W(-A)W(A)`;
/// * three relations: `c^2 B - c^2 E(phi)[psi + e^phi phi'/2]` and `c^2 I`.
pub fn closed_form_products(r: &Realization) -> Result<(NormalSeries, NormalSeries)> {
    let window = r.window;
    match &r.params {
        RealizationParams::TwoRel { v, w } => {
            let ww = w.neg_arg().mul(w).restrict(window);
            let vw = v.neg_arg().mul(w).restrict(window);
            let ww = NormalSeries::lift_a_series(&ww);
            let a2a3 = NormalSeries::lift_a_series(&vw).add(&ww.b_mul());
            Ok((a2a3, ww))
        }
        RealizationParams::ThreeRel { c, phi, psi } => {
            let c2 = c * c;
            let phi_prime = phi.derivative()?.restrict(window);
            let phi_w = phi.restrict(window);
            let inner = psi.restrict(window).add(
                &ASeries::a_exp(&phi_w)?
                    .mul(&phi_prime)
                    .scale(&GaussianRational::from_ratio(1, 2)),
            );
            let tail = ASeries::euler_e(&phi_w)?.mul(&inner).scale(&c2);
            let b = NormalSeries::monomial(1, 0, c2.clone(), window);
            let a2a3 = b.sub(&NormalSeries::lift_a_series(&tail));
            Ok((a2a3, NormalSeries::scalar(c2, window)))
        }
    }
}

/// Compares the closed forms with `A2 * A3` and `A3 * A3` on the exact
/// window.
pub fn check_closed_form_products(r: &Realization) -> Result<bool> {
    let (a2a3, a3a3) = closed_form_products(r)?;
    let got_a2a3 = r.a2.mul(&r.a3)?;
    let got_a3a3 = r.a3.mul(&r.a3)?;
    Ok(got_a2a3.eq_on_window(&a2a3) && got_a3a3.eq_on_window(&a3a3))
}
