use crate::error::{Error, Result};
use crate::frame::{Channel, ThresholdFrame};
use crate::rat::{format_rational, Rat};

fn check_peak(frame: &ThresholdFrame, ch: Channel, v: &Rat) -> Result<()> {
    if v < frame.psi(ch) || v > frame.omega(ch) {
        return Err(Error::OutOfFrame {
            id: String::new(),
            component: format!("peak {}", ch.letter()),
            value: format_rational(v),
            psi: format_rational(frame.psi(ch)),
            omega: format_rational(frame.omega(ch)),
        });
    }
    Ok(())
}

/// Triangular profile: T rises from 0 at a1 to w at a2 and falls back to 0 at
/// a3; I and F fall from 1 at the feet to u, y at the peak. Outside the
/// support the channels sit at (psi_T, omega_I, omega_F).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularOffnumber {
    pub a1: Rat,
    pub a2: Rat,
    pub a3: Rat,
    pub w: Rat,
    pub u: Rat,
    pub y: Rat,
    pub frame: ThresholdFrame,
}

impl TriangularOffnumber {
    pub fn new(
        a1: Rat,
        a2: Rat,
        a3: Rat,
        w: Rat,
        u: Rat,
        y: Rat,
        frame: ThresholdFrame,
    ) -> Result<TriangularOffnumber> {
        if !(a1 <= a2 && a2 <= a3) {
            return Err(Error::BadBounds(format!(
                "abscissae not ordered: {}, {}, {}",
                format_rational(&a1),
                format_rational(&a2),
                format_rational(&a3)
            )));
        }
        check_peak(&frame, Channel::T, &w)?;
        check_peak(&frame, Channel::I, &u)?;
        check_peak(&frame, Channel::F, &y)?;
        Ok(TriangularOffnumber {
            a1,
            a2,
            a3,
            w,
            u,
            y,
            frame,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrapezoidalOffnumber {
    pub a1: Rat,
    pub a2: Rat,
    pub a3: Rat,
    pub a4: Rat,
    pub w: Rat,
    pub u: Rat,
    pub y: Rat,
    pub frame: ThresholdFrame,
}

impl TrapezoidalOffnumber {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        a1: Rat,
        a2: Rat,
        a3: Rat,
        a4: Rat,
        w: Rat,
        u: Rat,
        y: Rat,
        frame: ThresholdFrame,
    ) -> Result<TrapezoidalOffnumber> {
        if !(a1 <= a2 && a2 <= a3 && a3 <= a4) {
            return Err(Error::BadBounds(format!(
                "abscissae not ordered: {}, {}, {}, {}",
                format_rational(&a1),
                format_rational(&a2),
                format_rational(&a3),
                format_rational(&a4)
            )));
        }
        check_peak(&frame, Channel::T, &w)?;
        check_peak(&frame, Channel::I, &u)?;
        check_peak(&frame, Channel::F, &y)?;
        Ok(TrapezoidalOffnumber {
            a1,
            a2,
            a3,
            a4,
            w,
            u,
            y,
            frame,
        })
    }
}

// Rising side of T on [lo, hi) toward peak w; the caller guarantees lo < hi.
fn t_side(x: &Rat, near: &Rat, far: &Rat, w: &Rat) -> Rat {
    (x - near) * w / (far - near)
}

// Falling side of I or F from 1 at `foot` down to `peak_v` at `peak`.
fn if_side(foot_dist: Rat, peak_dist: Rat, width: &Rat, peak_v: &Rat) -> Rat {
    (foot_dist + peak_v * peak_dist) / width
}

/// Piecewise evaluation. Collapsed sides (a1 = a2 or a2 = a3) use the peak
/// constant, the pointwise limit of the side formula as its width shrinks.
pub fn triangular_eval(n: &TriangularOffnumber, x: &Rat) -> (Rat, Rat, Rat) {
    let outside = (
        n.frame.psi(Channel::T).clone(),
        n.frame.omega(Channel::I).clone(),
        n.frame.omega(Channel::F).clone(),
    );
    if x < &n.a1 || x > &n.a3 {
        return outside;
    }
    if x == &n.a2 {
        return (n.w.clone(), n.u.clone(), n.y.clone());
    }
    if x < &n.a2 {
        let width = &n.a2 - &n.a1;
        (
            t_side(x, &n.a1, &n.a2, &n.w),
            if_side(&n.a2 - x, x - &n.a1, &width, &n.u),
            if_side(&n.a2 - x, x - &n.a1, &width, &n.y),
        )
    } else {
        let width = &n.a3 - &n.a2;
        (
            t_side(x, &n.a3, &n.a2, &n.w),
            if_side(x - &n.a2, &n.a3 - x, &width, &n.u),
            if_side(x - &n.a2, &n.a3 - x, &width, &n.y),
        )
    }
}

pub fn trapezoidal_eval(n: &TrapezoidalOffnumber, x: &Rat) -> (Rat, Rat, Rat) {
    let outside = (
        n.frame.psi(Channel::T).clone(),
        n.frame.omega(Channel::I).clone(),
        n.frame.omega(Channel::F).clone(),
    );
    if x < &n.a1 || x > &n.a4 {
        return outside;
    }
    if x >= &n.a2 && x <= &n.a3 {
        return (n.w.clone(), n.u.clone(), n.y.clone());
    }
    if x < &n.a2 {
        let width = &n.a2 - &n.a1;
        (
            t_side(x, &n.a1, &n.a2, &n.w),
            if_side(&n.a2 - x, x - &n.a1, &width, &n.u),
            if_side(&n.a2 - x, x - &n.a1, &width, &n.y),
        )
    } else {
        let width = &n.a4 - &n.a3;
        (
            t_side(x, &n.a4, &n.a3, &n.w),
            if_side(x - &n.a3, &n.a4 - x, &width, &n.u),
            if_side(x - &n.a3, &n.a4 - x, &width, &n.y),
        )
    }
}
