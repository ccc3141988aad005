//! Harness clock: event envelope timestamps are nanoseconds since a shared
//! epoch so that publish/handle lag is comparable across service processes on
//! one machine.

use std::time::{SystemTime, UNIX_EPOCH};

#[derive(Debug, Clone, Copy)]
pub struct EpochClock {
    /// Unix time of the harness epoch, in nanoseconds.
    epoch_unix_ns: u128,
}

impl EpochClock {
    /// Epoch at the moment of construction (single-process harness).
    pub fn starting_now() -> Self {
        Self {
            epoch_unix_ns: unix_ns(),
        }
    }

    /// Epoch shared with a coordinating process (passed over the CLI).
    pub fn from_unix_ns(epoch_unix_ns: u128) -> Self {
        Self { epoch_unix_ns }
    }

    pub fn epoch_unix_ns(&self) -> u128 {
        self.epoch_unix_ns
    }

    /// Nanoseconds elapsed since the harness epoch.
    pub fn now_ns(&self) -> u64 {
        unix_ns().saturating_sub(self.epoch_unix_ns) as u64
    }
}

fn unix_ns() -> u128 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .expect("system clock before unix epoch")
        .as_nanos()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monotone_within_process() {
        let clock = EpochClock::starting_now();
        let a = clock.now_ns();
        let b = clock.now_ns();
        assert!(b >= a);
    }

    #[test]
    fn shared_epoch_offsets_agree() {
        let clock = EpochClock::starting_now();
        let shared = EpochClock::from_unix_ns(clock.epoch_unix_ns());
        let delta = clock.now_ns().abs_diff(shared.now_ns());
        // Same process, same clock source: readings stay close.
        assert!(delta < 1_000_000_000);
    }
}
