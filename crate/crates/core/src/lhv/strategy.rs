use std::fmt;

use crate::hermitian::Outcome;

/// Local measurement setting of one party.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Setting {
    X,
    Y,
}

impl Setting {
    fn index(self) -> usize {
        match self {
            Setting::X => 0,
            Setting::Y => 1,
        }
    }
}

/// One of the four GHZ events: a joint setting and the required product outcome.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GhzEvent {
    pub settings: [Setting; 3],
    pub outcome: Outcome,
}

/// XXX = +1, XYY = -1, YXY = -1, YYX = -1, in that order.
pub const GHZ_EVENTS: [GhzEvent; 4] = [
    GhzEvent {
        settings: [Setting::X, Setting::X, Setting::X],
        outcome: Outcome::Plus,
    },
    GhzEvent {
        settings: [Setting::X, Setting::Y, Setting::Y],
        outcome: Outcome::Minus,
    },
    GhzEvent {
        settings: [Setting::Y, Setting::X, Setting::Y],
        outcome: Outcome::Minus,
    },
    GhzEvent {
        settings: [Setting::Y, Setting::Y, Setting::X],
        outcome: Outcome::Minus,
    },
];

/// Number of deterministic local strategies (2⁶).
pub const STRATEGY_COUNT: usize = 64;

/// A dispersion-free assignment of ±1 to σ_x and σ_y of each of the three
/// particles.
///
/// Stored as a 6-bit mask: bit `2·party + setting` is set when the value is −1,
/// so index 0 is the all-(+1) strategy and `enumerate_strategies` lists the
/// masks in increasing order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeterministicStrategy(u8);

impl DeterministicStrategy {
    pub fn from_index(index: usize) -> Option<Self> {
        (index < STRATEGY_COUNT).then_some(Self(index as u8))
    }

    /// Builds a strategy from values `v[party][setting]`, each ±1.
    pub fn from_values(values: [[i8; 2]; 3]) -> Option<Self> {
        let mut mask = 0u8;
        for (party, pair) in values.iter().enumerate() {
            for (setting, &v) in pair.iter().enumerate() {
                match v {
                    1 => {}
                    -1 => mask |= 1 << (2 * party + setting),
                    _ => return None,
                }
            }
        }
        Some(Self(mask))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Predetermined outcome of `setting` on `party` (0-based).
    pub fn value(self, party: usize, setting: Setting) -> i8 {
        assert!(party < 3, "party index out of range");
        if self.0 >> (2 * party + setting.index()) & 1 == 1 {
            -1
        } else {
            1
        }
    }

    /// Which of the four GHZ events this strategy produces.
    pub fn indicator(self) -> EventIndicator {
        let mut bits = [false; 4];
        for (bit, event) in bits.iter_mut().zip(GHZ_EVENTS.iter()) {
            let product: i8 = event
                .settings
                .iter()
                .enumerate()
                .map(|(party, &s)| self.value(party, s))
                .product();
            *bit = f64::from(product) == event.outcome.sign();
        }
        EventIndicator(bits)
    }
}

impl fmt::Debug for DeterministicStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = |v: i8| if v > 0 { '+' } else { '-' };
        write!(f, "Strategy[")?;
        for party in 0..3 {
            write!(
                f,
                "{}x{} {}y{}",
                party + 1,
                sign(self.value(party, Setting::X)),
                party + 1,
                sign(self.value(party, Setting::Y))
            )?;
            if party < 2 {
                write!(f, " ")?;
            }
        }
        write!(f, "]")
    }
}

/// All 64 deterministic strategies in mask order.
pub fn enumerate_strategies() -> Vec<DeterministicStrategy> {
    (0..STRATEGY_COUNT as u8).map(DeterministicStrategy).collect()
}

pub fn indicator(strategy: DeterministicStrategy) -> EventIndicator {
    strategy.indicator()
}

/// Membership of a strategy in each of the four GHZ events.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EventIndicator(pub [bool; 4]);

impl EventIndicator {
    pub fn bit_sum(self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn as_vector(self) -> [f64; 4] {
        self.0.map(|b| if b { 1.0 } else { 0.0 })
    }
}
