//! Emission plumbing shared by every enumerator.
//!
//! Enumerators push each produced set into a [`VertexSetStream`] as soon as
//! it is found and report the work they do through [`VertexSetStream::tick`].
//! Delay is therefore measured in counted basic operations (adjacency reads,
//! mark updates, set-construction steps), never in wall-clock time, which
//! keeps the per-emission accounting deterministic and auditable.

use std::ops::ControlFlow;

use crate::set::VertexSet;

/// Where emitted sets go. Implementations should not assume any particular
/// emission order; sortedness is the caller's business.
pub trait Consumer {
    fn consume(&mut self, set: &VertexSet);
}

impl Consumer for Vec<VertexSet> {
    fn consume(&mut self, set: &VertexSet) {
        self.push(set.clone());
    }
}

/// Drops everything; useful when only counts or delays are of interest.
pub struct Discard;

impl Consumer for Discard {
    fn consume(&mut self, _set: &VertexSet) {}
}

/// Adapts a closure to a consumer.
pub struct ForEach<F: FnMut(&VertexSet)>(pub F);

impl<F: FnMut(&VertexSet)> Consumer for ForEach<F> {
    fn consume(&mut self, set: &VertexSet) {
        (self.0)(set);
    }
}

/// Inter-emission delay statistics in counted basic operations. Gaps are
/// measured between consecutive emissions only; a run with at most one
/// emission has no gaps.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DelayStats {
    pub emissions: u64,
    pub max_delay: u64,
    pub total_delay: u64,
}

impl DelayStats {
    pub fn gaps(&self) -> u64 {
        self.emissions.saturating_sub(1)
    }

    pub fn mean_delay(&self) -> f64 {
        if self.gaps() == 0 {
            0.0
        } else {
            self.total_delay as f64 / self.gaps() as f64
        }
    }
}

/// Ordered, duplicate-free emission channel with an operation counter and an
/// optional emission limit. Duplicate-freedom is a property the enumerators
/// guarantee (and the tests verify); the stream itself only forwards.
pub struct VertexSetStream<'a> {
    consumer: &'a mut dyn Consumer,
    limit: Option<u64>,
    ops: u64,
    last_emit_ops: u64,
    stats: DelayStats,
    stopped: bool,
}

impl<'a> VertexSetStream<'a> {
    pub fn new(consumer: &'a mut dyn Consumer) -> VertexSetStream<'a> {
        VertexSetStream {
            consumer,
            limit: None,
            ops: 0,
            last_emit_ops: 0,
            stats: DelayStats::default(),
            stopped: false,
        }
    }

    /// Stop (returning `Break` from `emit`) after `limit` emissions.
    pub fn with_limit(consumer: &'a mut dyn Consumer, limit: u64) -> VertexSetStream<'a> {
        let mut s = VertexSetStream::new(consumer);
        s.limit = Some(limit);
        s
    }

    /// Record `ops` basic operations.
    pub fn tick(&mut self, ops: u64) {
        self.ops += ops;
    }

    /// Emit one set. `Break` means the consumer has seen enough (emission
    /// limit reached); enumerators must unwind promptly and stop emitting.
    pub fn emit(&mut self, set: &VertexSet) -> ControlFlow<()> {
        if self.stopped || self.limit == Some(0) {
            self.stopped = true;
            return ControlFlow::Break(());
        }
        if self.stats.emissions > 0 {
            let gap = self.ops - self.last_emit_ops;
            self.stats.max_delay = self.stats.max_delay.max(gap);
            self.stats.total_delay += gap;
        }
        self.stats.emissions += 1;
        self.last_emit_ops = self.ops;
        self.consumer.consume(set);
        if self.limit == Some(self.stats.emissions) {
            self.stopped = true;
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    }

    pub fn emissions(&self) -> u64 {
        self.stats.emissions
    }

    pub fn ops(&self) -> u64 {
        self.ops
    }

    pub fn stats(&self) -> &DelayStats {
        &self.stats
    }
}

/// Run an enumerator that only needs a stream and collect its output.
pub fn collect_stream<E>(
    run: impl FnOnce(&mut VertexSetStream) -> Result<(), E>,
) -> Result<Vec<VertexSet>, E> {
    let mut out = Vec::new();
    let mut stream = VertexSetStream::new(&mut out);
    run(&mut stream)?;
    Ok(out)
}
