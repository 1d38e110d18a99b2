use crate::error::{Error, Result};
use crate::rat::{format_rational, int, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Channel {
    T,
    I,
    F,
}

impl Channel {
    pub const ALL: [Channel; 3] = [Channel::T, Channel::I, Channel::F];

    pub fn letter(self) -> char {
        match self {
            Channel::T => 'T',
            Channel::I => 'I',
            Channel::F => 'F',
        }
    }
}

/// Per-channel underlimit psi and overlimit omega, with psi <= 0 < 1 <= omega.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThresholdFrame {
    psi_t: Rat,
    omega_t: Rat,
    psi_i: Rat,
    omega_i: Rat,
    psi_f: Rat,
    omega_f: Rat,
}

pub fn make_frame(
    psi_t: Rat,
    omega_t: Rat,
    psi_i: Rat,
    omega_i: Rat,
    psi_f: Rat,
    omega_f: Rat,
) -> Result<ThresholdFrame> {
    ThresholdFrame::new(psi_t, omega_t, psi_i, omega_i, psi_f, omega_f)
}

impl ThresholdFrame {
    pub fn new(
        psi_t: Rat,
        omega_t: Rat,
        psi_i: Rat,
        omega_i: Rat,
        psi_f: Rat,
        omega_f: Rat,
    ) -> Result<ThresholdFrame> {
        for (ch, psi, omega) in [
            ('T', &psi_t, &omega_t),
            ('I', &psi_i, &omega_i),
            ('F', &psi_f, &omega_f),
        ] {
            if psi > &int(0) || omega < &int(1) || psi >= omega {
                return Err(Error::InvalidFrame {
                    channel: ch,
                    psi: format_rational(psi),
                    omega: format_rational(omega),
                });
            }
        }
        Ok(ThresholdFrame {
            psi_t,
            omega_t,
            psi_i,
            omega_i,
            psi_f,
            omega_f,
        })
    }

    /// Same psi/omega on all three channels.
    pub fn uniform(psi: Rat, omega: Rat) -> Result<ThresholdFrame> {
        ThresholdFrame::new(
            psi.clone(),
            omega.clone(),
            psi.clone(),
            omega.clone(),
            psi,
            omega,
        )
    }

    /// The classical unit cube.
    pub fn unit() -> ThresholdFrame {
        ThresholdFrame::uniform(int(0), int(1)).unwrap()
    }

    pub fn psi(&self, ch: Channel) -> &Rat {
        match ch {
            Channel::T => &self.psi_t,
            Channel::I => &self.psi_i,
            Channel::F => &self.psi_f,
        }
    }

    pub fn omega(&self, ch: Channel) -> &Rat {
        match ch {
            Channel::T => &self.omega_t,
            Channel::I => &self.omega_i,
            Channel::F => &self.omega_f,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::parse_rational;

    fn r(s: &str) -> Rat {
        parse_rational(s).unwrap()
    }

    #[test]
    fn accepts_paper_frame() {
        let f = ThresholdFrame::uniform(r("-1.2"), r("1.2")).unwrap();
        assert_eq!(f.psi(Channel::T), &r("-1.2"));
        assert_eq!(f.omega(Channel::F), &r("1.2"));
    }

    #[test]
    fn accepts_unit_cube() {
        let f = ThresholdFrame::unit();
        assert_eq!(f.psi(Channel::I), &int(0));
        assert_eq!(f.omega(Channel::I), &int(1));
    }

    #[test]
    fn rejects_invalid_prisms() {
        assert!(ThresholdFrame::uniform(r("0.1"), r("1.2")).is_err());
        assert!(ThresholdFrame::uniform(r("-0.5"), r("0.9")).is_err());
        assert!(make_frame(int(0), int(1), int(0), int(1), r("0.2"), int(1)).is_err());
    }
}
