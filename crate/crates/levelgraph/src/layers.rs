use crate::count::{binom, Count};
use crate::error::{Error, Result};
use crate::metric::{LayerIndex, LayerSide};
use crate::params::LevelParams;
use crate::vertex::{sets_of_size, VertexSet};

/// Cap on universes for which layers can be enumerated vertex by vertex.
pub const MAX_ENUMERATION_UNIVERSE: u32 = 20;

/// Exact sizes of every reachability layer around the initial vertex.
///
/// `gamma[i]` counts small-side vertices at distance `2i`, `delta[i]`
/// counts large-side vertices at distance `2i + 1`, for `i` in
/// `0..=radius`. Each column sums to `binom(n, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerTable<C> {
    params: LevelParams,
    gamma: Vec<C>,
    delta: Vec<C>,
}

impl<C: Count> LayerTable<C> {
    pub fn params(&self) -> LevelParams {
        self.params
    }

    pub fn gamma(&self) -> &[C] {
        &self.gamma
    }

    pub fn delta(&self) -> &[C] {
        &self.delta
    }

    /// Layer sizes interleaved by distance: `gamma[0], delta[0], gamma[1], …`
    pub fn interleaved(&self) -> Vec<C> {
        let mut result = Vec::with_capacity(self.gamma.len() + self.delta.len());
        for i in 0..self.gamma.len() {
            result.push(self.gamma[i].clone());
            result.push(self.delta[i].clone());
        }
        result
    }
}

/// Outcome of evaluating the two layer-sum identities against `binom(n, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport<C> {
    pub binomial: C,
    pub gamma_sum: C,
    pub delta_sum: C,
}

impl<C: PartialEq> IdentityReport<C> {
    pub fn holds(&self) -> bool {
        self.gamma_sum == self.binomial && self.delta_sum == self.binomial
    }
}

impl LevelParams {
    /// Number of small-side vertices at distance `2i` from the initial
    /// vertex: the sum over `j = 1..=gap` of
    /// `binom(k, k - l) * binom(n - k, l)` with `l = (i-1)*gap + j`.
    ///
    /// Terms whose `l` leaves `0..=k` vanish under the extended binomial
    /// convention; they are kept rather than re-indexed away.
    pub fn gamma<C: Count>(&self, i: u32) -> Result<C> {
        self.check_layer_index(i)?;
        let (k, large) = (self.k() as i64, self.large_size() as i64);
        let gap = self.gap() as i64;
        let mut total = C::zero();
        for j in 1..=gap {
            let moved = (i as i64 - 1) * gap + j;
            let choices = binom::<C>(k, k - moved)?
                .checked_mul(&binom::<C>(large, moved)?)
                .ok_or(Error::CountOverflow)?;
            total = total.checked_add(&choices).ok_or(Error::CountOverflow)?;
        }
        Ok(total)
    }

    /// Number of large-side vertices at distance `2i + 1` from the initial
    /// vertex: the sum over `j = 1..=gap` of
    /// `binom(k, k - l) * binom(n - k, i*gap + j)` with `l = (i-1)*gap + j`.
    pub fn delta<C: Count>(&self, i: u32) -> Result<C> {
        self.check_layer_index(i)?;
        let (k, large) = (self.k() as i64, self.large_size() as i64);
        let gap = self.gap() as i64;
        let mut total = C::zero();
        for j in 1..=gap {
            let moved = (i as i64 - 1) * gap + j;
            let choices = binom::<C>(k, k - moved)?
                .checked_mul(&binom::<C>(large, i as i64 * gap + j)?)
                .ok_or(Error::CountOverflow)?;
            total = total.checked_add(&choices).ok_or(Error::CountOverflow)?;
        }
        Ok(total)
    }

    /// Number of vertices at distance exactly `steps` from the initial
    /// vertex, for `steps` in `0..=2*radius + 1`: the interleaving of
    /// [`gamma`](LevelParams::gamma) and [`delta`](LevelParams::delta).
    pub fn count_at_distance<C: Count>(&self, steps: u32) -> Result<C> {
        let max = 2 * self.radius() + 1;
        if steps > max {
            return Err(Error::StepOutOfRange { step: steps, max });
        }
        if steps.is_multiple_of(2) {
            self.gamma(steps / 2)
        } else {
            self.delta((steps - 1) / 2)
        }
    }

    /// Every layer size at once.
    pub fn layer_table<C: Count>(&self) -> Result<LayerTable<C>> {
        let mut gamma = Vec::with_capacity(self.radius() as usize + 1);
        let mut delta = Vec::with_capacity(self.radius() as usize + 1);
        for i in 0..=self.radius() {
            gamma.push(self.gamma(i)?);
            delta.push(self.delta(i)?);
        }
        Ok(LayerTable { params: *self, gamma, delta })
    }

    /// All vertices of one layer, in ascending mask order. The list length
    /// equals the corresponding `gamma` or `delta` value; universes above
    /// [`MAX_ENUMERATION_UNIVERSE`] are rejected.
    pub fn enumerate_layer(&self, which: LayerIndex) -> Result<Vec<VertexSet>> {
        if self.n() > MAX_ENUMERATION_UNIVERSE {
            return Err(Error::UniverseTooLarge { n: self.n(), max: MAX_ENUMERATION_UNIVERSE });
        }
        self.check_layer_index(which.index)?;
        let size = match which.side {
            LayerSide::Small => self.k(),
            LayerSide::Large => self.large_size(),
        };
        Ok(sets_of_size(self.n(), size)
            .filter(|v| self.classify(v).expect("enumerated sets are vertices") == which)
            .collect())
    }

    /// Evaluates both layer-sum identities exactly and compares each
    /// against `binom(n, k)`.
    pub fn verify_identities<C: Count>(&self) -> Result<IdentityReport<C>> {
        let mut gamma_sum = C::zero();
        let mut delta_sum = C::zero();
        for i in 0..=self.radius() {
            gamma_sum = gamma_sum.checked_add(&self.gamma(i)?).ok_or(Error::CountOverflow)?;
            delta_sum = delta_sum.checked_add(&self.delta(i)?).ok_or(Error::CountOverflow)?;
        }
        let binomial = binom::<C>(self.n() as i64, self.k() as i64)?;
        Ok(IdentityReport { binomial, gamma_sum, delta_sum })
    }

    fn check_layer_index(&self, i: u32) -> Result<()> {
        if i > self.radius() {
            return Err(Error::LayerOutOfRange { index: i, max: self.radius() });
        }
        Ok(())
    }
}
