use std::ops::{Add, AddAssign};

use serde::Serialize;

/// Primitive set operations performed by one run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
pub struct OpCounter {
    pub membership_checks: u64,
    pub insertions: u64,
    pub copies: u64,
    pub pair_creations: u64,
}

impl OpCounter {
    pub fn total(&self) -> u64 {
        self.membership_checks + self.insertions + self.copies + self.pair_creations
    }

    pub fn check(&mut self) {
        self.membership_checks += 1;
    }

    pub fn insert(&mut self) {
        self.insertions += 1;
    }

    pub fn copy(&mut self) {
        self.copies += 1;
    }

    pub fn pair(&mut self) {
        self.pair_creations += 1;
    }
}

impl Add for OpCounter {
    type Output = OpCounter;

    fn add(self, o: OpCounter) -> OpCounter {
        OpCounter {
            membership_checks: self.membership_checks + o.membership_checks,
            insertions: self.insertions + o.insertions,
            copies: self.copies + o.copies,
            pair_creations: self.pair_creations + o.pair_creations,
        }
    }
}

impl AddAssign for OpCounter {
    fn add_assign(&mut self, o: OpCounter) {
        *self = *self + o;
    }
}
