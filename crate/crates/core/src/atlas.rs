//! Shared, memoized access to the crystals and Cartan embeddings of one root
//! datum. Entries are computed outside the lock and inserted once, so
//! concurrent readers never block on a long computation.

use crate::crystal::{CartanEmbedding, Crystal, TensorCrystal, CRYSTAL_CAP};
use crate::error::Result;
use crate::rootdata::{RootDatum, Weight};
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

#[derive(Debug)]
pub struct Atlas {
    datum: Arc<RootDatum>,
    cap: usize,
    crystals: RwLock<HashMap<Weight, Arc<Crystal>>>,
    embeddings: RwLock<HashMap<Vec<Weight>, Arc<CartanEmbedding>>>,
}

impl Atlas {
    pub fn new(datum: RootDatum) -> Arc<Self> {
        Self::with_cap(Arc::new(datum), CRYSTAL_CAP)
    }

    pub fn parse(label: &str) -> Result<Arc<Self>> {
        Ok(Self::new(RootDatum::parse(label)?))
    }

    pub fn with_cap(datum: Arc<RootDatum>, cap: usize) -> Arc<Self> {
        Arc::new(Atlas {
            datum,
            cap,
            crystals: RwLock::default(),
            embeddings: RwLock::default(),
        })
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn fundamental(&self, i: usize) -> Weight {
        self.datum.fundamental_weight(i)
    }

    pub fn crystal(&self, lambda: &Weight) -> Result<Arc<Crystal>> {
        if let Some(c) = self.crystals.read().unwrap().get(lambda) {
            return Ok(c.clone());
        }
        let c = Arc::new(Crystal::highest_weight(&self.datum, lambda, self.cap)?);
        let mut map = self.crystals.write().unwrap();
        Ok(map.entry(lambda.clone()).or_insert(c).clone())
    }

    pub fn tensor(&self, weights: &[Weight]) -> Result<TensorCrystal> {
        let factors = weights
            .iter()
            .map(|w| self.crystal(w))
            .collect::<Result<Vec<_>>>()?;
        TensorCrystal::new(factors)
    }

    pub fn sum(&self, weights: &[Weight]) -> Weight {
        weights.iter().fold(self.datum.zero(), |acc, w| &acc + w)
    }

    pub fn cartan(&self, weights: &[Weight]) -> Result<Arc<CartanEmbedding>> {
        if let Some(e) = self.embeddings.read().unwrap().get(weights) {
            return Ok(e.clone());
        }
        let tensor = self.tensor(weights)?;
        let target = self.crystal(&self.sum(weights))?;
        let e = Arc::new(CartanEmbedding::new(&tensor, target)?);
        let mut map = self.embeddings.write().unwrap();
        Ok(map.entry(weights.to_vec()).or_insert(e).clone())
    }
}
