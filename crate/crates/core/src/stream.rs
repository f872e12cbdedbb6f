//! Pull-based streams with an explicit "nothing yet" signal.
//!
//! Recursively enumerable sets (relator lists, sets of naturals) are consumed
//! through [`Source::pull`]. A pull either yields an item, reports that the
//! source did a unit of work without producing anything ([`Pull::Stalled`]),
//! or reports that the source is finished for good ([`Pull::Exhausted`]).
//! Finite lists embed as sources that never stall.

/// Result of one pull on a [`Source`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pull<T> {
    Item(T),
    /// No item produced by this pull; later pulls may still produce one.
    Stalled,
    /// The source will never produce another item.
    Exhausted,
}

impl<T> Pull<T> {
    pub fn item(self) -> Option<T> {
        match self {
            Pull::Item(x) => Some(x),
            _ => None,
        }
    }
}

pub trait Source<T> {
    fn pull(&mut self) -> Pull<T>;
}

impl<T, S: Source<T> + ?Sized> Source<T> for Box<S> {
    fn pull(&mut self) -> Pull<T> {
        (**self).pull()
    }
}

/// A finite list served in order, then `Exhausted`.
#[derive(Debug, Clone)]
pub struct FiniteSource<T> {
    items: std::vec::IntoIter<T>,
}

impl<T> FiniteSource<T> {
    pub fn new(items: Vec<T>) -> Self {
        FiniteSource { items: items.into_iter() }
    }
}

impl<T> Source<T> for FiniteSource<T> {
    fn pull(&mut self) -> Pull<T> {
        match self.items.next() {
            Some(x) => Pull::Item(x),
            None => Pull::Exhausted,
        }
    }
}

/// Wraps an iterator; `None` becomes `Exhausted`.
pub struct IterSource<I>(pub I);

impl<I: Iterator> Source<I::Item> for IterSource<I> {
    fn pull(&mut self) -> Pull<I::Item> {
        match self.0.next() {
            Some(x) => Pull::Item(x),
            None => Pull::Exhausted,
        }
    }
}

/// Source backed by a closure.
pub struct FnSource<F>(pub F);

impl<T, F: FnMut() -> Pull<T>> Source<T> for FnSource<F> {
    fn pull(&mut self) -> Pull<T> {
        (self.0)()
    }
}

/// Pulls at most `max_pulls` times, collecting items. The flag reports
/// whether the source signalled exhaustion.
pub fn drain<T, S: Source<T> + ?Sized>(source: &mut S, max_pulls: usize) -> (Vec<T>, bool) {
    let mut out = Vec::new();
    for _ in 0..max_pulls {
        match source.pull() {
            Pull::Item(x) => out.push(x),
            Pull::Stalled => {}
            Pull::Exhausted => return (out, true),
        }
    }
    (out, false)
}
