//! Core data model: stations, channels, interference and domain constraints,
//! assignments, and the constraint checks that define feasibility.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

/// A broadcast station, identified by a non-negative integer.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct StationId(pub u32);

/// A channel number. The numeric order is the cost order.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct ChannelId(pub u32);

impl fmt::Display for StationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for ChannelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A (station, channel) pair. Orders lexicographically by station, then channel.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct StationChannelPair {
    pub station: StationId,
    pub channel: ChannelId,
}

impl StationChannelPair {
    pub fn new(station: StationId, channel: ChannelId) -> Self {
        Self { station, channel }
    }
}

impl fmt::Display for StationChannelPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.station, self.channel)
    }
}

/// An unordered pair of station-channel pairs that may not both be selected.
///
/// Stored with `a < b` in (station, channel) order so that equality and
/// deduplication are well defined. The two stations are always distinct;
/// same-station pairs are redundant with the at-most constraints and are
/// rejected at construction.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct InterferenceConstraint {
    a: StationChannelPair,
    b: StationChannelPair,
}

impl InterferenceConstraint {
    /// Canonicalizes the pair. Returns `None` for same-station pairs.
    pub fn new(x: StationChannelPair, y: StationChannelPair) -> Option<Self> {
        if x.station == y.station {
            return None;
        }
        if x <= y {
            Some(Self { a: x, b: y })
        } else {
            Some(Self { a: y, b: x })
        }
    }

    pub fn a(&self) -> StationChannelPair {
        self.a
    }

    pub fn b(&self) -> StationChannelPair {
        self.b
    }

    /// The endpoint for `station`, if this constraint involves it.
    pub fn endpoint_for(&self, station: StationId) -> Option<StationChannelPair> {
        if self.a.station == station {
            Some(self.a)
        } else if self.b.station == station {
            Some(self.b)
        } else {
            None
        }
    }

    pub fn stations(&self) -> (StationId, StationId) {
        (self.a.station, self.b.station)
    }
}

impl fmt::Display for InterferenceConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.a, self.b)
    }
}

/// The per-station channel domains. The key set is the station set S and the
/// union of the values is the channel set C.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct DomainMap {
    entries: BTreeMap<StationId, BTreeSet<ChannelId>>,
}

impl DomainMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries(entries: BTreeMap<StationId, BTreeSet<ChannelId>>) -> Self {
        Self { entries }
    }

    pub fn insert(&mut self, station: StationId, channels: BTreeSet<ChannelId>) {
        self.entries.insert(station, channels);
    }

    pub fn get(&self, station: StationId) -> Option<&BTreeSet<ChannelId>> {
        self.entries.get(&station)
    }

    pub fn contains_station(&self, station: StationId) -> bool {
        self.entries.contains_key(&station)
    }

    pub fn stations(&self) -> impl Iterator<Item = StationId> + '_ {
        self.entries.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (StationId, &BTreeSet<ChannelId>)> {
        self.entries.iter().map(|(s, cs)| (*s, cs))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The channel set C, the union of all domains.
    pub fn channels(&self) -> BTreeSet<ChannelId> {
        self.entries.values().flatten().copied().collect()
    }
}

/// A problem instance: normalized interference constraints plus domains.
///
/// Construct through [`normalize`] (or the ingest module); both maintain the
/// invariants that the constraint list is canonically ordered and
/// deduplicated and that every constrained station has a domain entry.
/// Constraints whose channels fall outside the named station's domain are
/// retained here; they contribute no edge at graph construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    interference: Vec<InterferenceConstraint>,
    domains: DomainMap,
}

impl Instance {
    pub fn interference(&self) -> &[InterferenceConstraint] {
        &self.interference
    }

    pub fn domains(&self) -> &DomainMap {
        &self.domains
    }

    pub fn stations(&self) -> impl Iterator<Item = StationId> + '_ {
        self.domains.stations()
    }

    pub fn station_count(&self) -> usize {
        self.domains.len()
    }

    pub fn channels(&self) -> BTreeSet<ChannelId> {
        self.domains.channels()
    }

    pub fn domain(&self, station: StationId) -> Option<&BTreeSet<ChannelId>> {
        self.domains.get(station)
    }

    /// Stations whose domain is empty. Any such station makes the instance
    /// trivially infeasible; restricting channels can produce them.
    pub fn empty_domain_stations(&self) -> Vec<StationId> {
        self.domains
            .iter()
            .filter(|(_, cs)| cs.is_empty())
            .map(|(s, _)| s)
            .collect()
    }

    pub fn is_trivially_infeasible(&self) -> bool {
        self.domains.iter().any(|(_, cs)| cs.is_empty())
    }

    /// Checks an assignment against the domain, interference, and
    /// completeness constraints. An empty result means `f` is feasible
    /// (and complete, when `require_complete` is set).
    pub fn check(&self, f: &Assignment, require_complete: bool) -> Vec<Violation> {
        let mut violations = Vec::new();
        for (station, channel) in f.iter() {
            let in_domain = self
                .domains
                .get(station)
                .map(|cs| cs.contains(&channel))
                .unwrap_or(false);
            if !in_domain {
                violations.push(Violation::Domain { station, channel });
            }
        }
        for &constraint in &self.interference {
            let a = constraint.a();
            let b = constraint.b();
            if f.get(a.station) == Some(a.channel) && f.get(b.station) == Some(b.channel) {
                violations.push(Violation::Interference { constraint });
            }
        }
        if require_complete {
            for station in self.stations() {
                if f.get(station).is_none() {
                    violations.push(Violation::Incomplete { station });
                }
            }
        }
        violations
    }

    /// Restricts to the stations in `keep`, clearing all others. Domains of
    /// cleared stations are dropped and only constraints with both stations
    /// kept survive.
    pub fn restrict_stations(&self, keep: &BTreeSet<StationId>) -> Result<Instance, ModelError> {
        let unknown: Vec<StationId> = keep
            .iter()
            .copied()
            .filter(|s| !self.domains.contains_station(*s))
            .collect();
        if !unknown.is_empty() {
            return Err(ModelError::UnknownStations(unknown));
        }
        let domains = DomainMap::from_entries(
            self.domains
                .iter()
                .filter(|(s, _)| keep.contains(s))
                .map(|(s, cs)| (s, cs.clone()))
                .collect(),
        );
        let interference = self
            .interference
            .iter()
            .copied()
            .filter(|c| keep.contains(&c.a().station) && keep.contains(&c.b().station))
            .collect();
        Ok(Instance {
            interference,
            domains,
        })
    }

    /// Restricts every domain to channels at or below the clearing target.
    /// Constraints are kept verbatim; ones that now reference out-of-domain
    /// channels become inert at graph construction. Domains may come out
    /// empty, which makes the instance trivially infeasible.
    pub fn restrict_channels(&self, c_star: ChannelId) -> Instance {
        let domains = DomainMap::from_entries(
            self.domains
                .iter()
                .map(|(s, cs)| {
                    let restricted: BTreeSet<ChannelId> =
                        cs.iter().copied().filter(|c| *c <= c_star).collect();
                    (s, restricted)
                })
                .collect(),
        );
        Instance {
            interference: self.interference.clone(),
            domains,
        }
    }

    /// The set of channel offsets appearing in the interference constraints.
    pub fn offsets(&self) -> OffsetProfile {
        let mut offsets = BTreeSet::new();
        for c in &self.interference {
            let d = i64::from(c.b().channel.0) - i64::from(c.a().channel.0);
            offsets.insert(d);
            offsets.insert(-d);
        }
        OffsetProfile { offsets }
    }
}

/// The offsets present in an instance, counted in both signs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OffsetProfile {
    offsets: BTreeSet<i64>,
}

impl OffsetProfile {
    pub fn offsets(&self) -> &BTreeSet<i64> {
        &self.offsets
    }

    pub fn max_offset(&self) -> Option<i64> {
        self.offsets.iter().max().copied()
    }

    /// True when the offsets form a consecutive run symmetric about zero,
    /// the shape real interference data is expected to have. Vacuously true
    /// for a constraint-free instance.
    pub fn is_consecutive_symmetric(&self) -> bool {
        match self.max_offset() {
            None => true,
            Some(m) if m < 0 => false,
            Some(m) => (-m..=m).all(|k| self.offsets.contains(&k)),
        }
    }
}

/// A partial channel assignment, at most one channel per station.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Assignment {
    entries: BTreeMap<StationId, ChannelId>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries<I: IntoIterator<Item = (StationId, ChannelId)>>(entries: I) -> Self {
        Self {
            entries: entries.into_iter().collect(),
        }
    }

    pub fn insert(&mut self, station: StationId, channel: ChannelId) {
        self.entries.insert(station, channel);
    }

    pub fn get(&self, station: StationId) -> Option<ChannelId> {
        self.entries.get(&station).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (StationId, ChannelId)> + '_ {
        self.entries.iter().map(|(s, c)| (*s, *c))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The cost of the assignment: the maximum assigned channel.
    pub fn cost(&self) -> Result<ChannelId, ModelError> {
        self.entries
            .values()
            .max()
            .copied()
            .ok_or(ModelError::EmptyAssignmentCost)
    }
}

impl FromIterator<(StationId, ChannelId)> for Assignment {
    fn from_iter<I: IntoIterator<Item = (StationId, ChannelId)>>(iter: I) -> Self {
        Self::from_entries(iter)
    }
}

/// A single constraint violation found by [`Instance::check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    /// The station is assigned a channel outside its domain (or is unknown).
    Domain {
        station: StationId,
        channel: ChannelId,
    },
    /// Both endpoints of an interference constraint are assigned.
    Interference { constraint: InterferenceConstraint },
    /// The station has no assignment but the check demanded completeness.
    Incomplete { station: StationId },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Domain { station, channel } => {
                write!(f, "station {station} assigned out-of-domain channel {channel}")
            }
            Violation::Interference { constraint } => {
                write!(f, "interference constraint {constraint} violated")
            }
            Violation::Incomplete { station } => {
                write!(f, "station {station} has no assignment")
            }
        }
    }
}

/// Anomalies normalization repaired rather than rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalizeWarning {
    /// A raw constraint paired a station with itself; dropped as redundant
    /// with the at-most constraints.
    SameStation { pair: StationChannelPair },
    /// A raw constraint named a station with no domain entry; dropped.
    UnknownStation {
        station: StationId,
        x: StationChannelPair,
        y: StationChannelPair,
    },
    /// A constraint appeared more than once (possibly in both orientations).
    DuplicateConstraint { constraint: InterferenceConstraint },
}

impl fmt::Display for NormalizeWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalizeWarning::SameStation { pair } => {
                write!(f, "same-station constraint at {pair} dropped")
            }
            NormalizeWarning::UnknownStation { station, x, y } => {
                write!(f, "constraint ({x},{y}) names unknown station {station}; dropped")
            }
            NormalizeWarning::DuplicateConstraint { constraint } => {
                write!(f, "duplicate constraint {constraint} collapsed")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelError {
    /// Cost is the maximum over assigned channels, undefined when empty.
    EmptyAssignmentCost,
    /// restrict_stations was given stations outside the instance.
    UnknownStations(Vec<StationId>),
    /// The k-coloring construction requires a simple graph.
    LoopEdge { vertex: u32 },
    DuplicateEdge { u: u32, v: u32 },
    EdgeOutOfRange { u: u32, v: u32, vertex_count: u32 },
    /// The k-coloring construction requires at least one color.
    ZeroColors,
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::EmptyAssignmentCost => {
                write!(f, "cost is undefined for an empty assignment")
            }
            ModelError::UnknownStations(stations) => {
                write!(f, "unknown stations:")?;
                for s in stations {
                    write!(f, " {s}")?;
                }
                Ok(())
            }
            ModelError::LoopEdge { vertex } => {
                write!(f, "graph is not simple: loop at vertex {vertex}")
            }
            ModelError::DuplicateEdge { u, v } => {
                write!(f, "graph is not simple: duplicate edge {{{u},{v}}}")
            }
            ModelError::EdgeOutOfRange { u, v, vertex_count } => {
                write!(f, "edge {{{u},{v}}} out of range for {vertex_count} vertices")
            }
            ModelError::ZeroColors => write!(f, "k-coloring construction requires k >= 1"),
        }
    }
}

impl std::error::Error for ModelError {}

/// A raw, ordered interference constraint as found in input data.
pub type RawConstraint = (StationChannelPair, StationChannelPair);

/// Turns raw ordered constraint pairs plus domains into a canonical instance.
///
/// Purely syntactic: orientations collapse, duplicates merge, same-station
/// pairs drop, and constraints naming stations without a domain entry drop,
/// each with a warning. Constraints whose channels are outside the named
/// station's domain are retained; graph construction removes them by taking
/// the edge set as the intersection with the vertex pairs.
pub fn normalize(
    raw: &[RawConstraint],
    domains: DomainMap,
) -> (Instance, Vec<NormalizeWarning>) {
    let mut warnings = Vec::new();
    let mut set: BTreeSet<InterferenceConstraint> = BTreeSet::new();
    for &(x, y) in raw {
        let mut unknown = None;
        if !domains.contains_station(x.station) {
            unknown = Some(x.station);
        } else if !domains.contains_station(y.station) {
            unknown = Some(y.station);
        }
        if let Some(station) = unknown {
            warnings.push(NormalizeWarning::UnknownStation { station, x, y });
            continue;
        }
        match InterferenceConstraint::new(x, y) {
            None => warnings.push(NormalizeWarning::SameStation { pair: x }),
            Some(constraint) => {
                if !set.insert(constraint) {
                    warnings.push(NormalizeWarning::DuplicateConstraint { constraint });
                }
            }
        }
    }
    let instance = Instance {
        interference: set.into_iter().collect(),
        domains,
    };
    (instance, warnings)
}

/// Builds the instance whose feasibility matches proper k-colorability of a
/// simple graph: every vertex becomes a station with domain {1..k}, and every
/// edge contributes a co-channel constraint on each channel.
pub fn encode_k_coloring(
    vertex_count: u32,
    edges: &[(u32, u32)],
    k: u32,
) -> Result<Instance, ModelError> {
    if k == 0 {
        return Err(ModelError::ZeroColors);
    }
    let mut seen = BTreeSet::new();
    for &(u, v) in edges {
        if u >= vertex_count || v >= vertex_count {
            return Err(ModelError::EdgeOutOfRange {
                u,
                v,
                vertex_count,
            });
        }
        if u == v {
            return Err(ModelError::LoopEdge { vertex: u });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(ModelError::DuplicateEdge { u, v });
        }
    }
    let colors: BTreeSet<ChannelId> = (1..=k).map(ChannelId).collect();
    let mut domains = DomainMap::new();
    for s in 0..vertex_count {
        domains.insert(StationId(s), colors.clone());
    }
    let mut raw = Vec::with_capacity(seen.len() * k as usize);
    for &(u, v) in &seen {
        for c in 1..=k {
            raw.push((
                StationChannelPair::new(StationId(u), ChannelId(c)),
                StationChannelPair::new(StationId(v), ChannelId(c)),
            ));
        }
    }
    let (instance, warnings) = normalize(&raw, domains);
    debug_assert!(warnings.is_empty());
    Ok(instance)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(s: u32, c: u32) -> StationChannelPair {
        StationChannelPair::new(StationId(s), ChannelId(c))
    }

    fn domains(entries: &[(u32, &[u32])]) -> DomainMap {
        let mut d = DomainMap::new();
        for (s, cs) in entries {
            d.insert(
                StationId(*s),
                cs.iter().map(|c| ChannelId(*c)).collect(),
            );
        }
        d
    }

    /// The two-station instance used throughout: one co-channel constraint
    /// on channel 1, station 1 may also use channel 2.
    pub(crate) fn ex1() -> Instance {
        let (instance, warnings) = normalize(
            &[(pair(1, 1), pair(2, 1))],
            domains(&[(1, &[1, 2]), (2, &[1])]),
        );
        assert!(warnings.is_empty());
        instance
    }

    fn assignment(entries: &[(u32, u32)]) -> Assignment {
        entries
            .iter()
            .map(|(s, c)| (StationId(*s), ChannelId(*c)))
            .collect()
    }

    #[test]
    fn normalize_collapses_orientations() {
        let (instance, _) = normalize(
            &[(pair(1, 1), pair(2, 1)), (pair(2, 1), pair(1, 1))],
            domains(&[(1, &[1, 2]), (2, &[1])]),
        );
        assert_eq!(instance.interference().len(), 1);
        let c = instance.interference()[0];
        assert_eq!(c.a(), pair(1, 1));
        assert_eq!(c.b(), pair(2, 1));
    }

    #[test]
    fn normalize_drops_same_station() {
        let (instance, warnings) =
            normalize(&[(pair(1, 1), pair(1, 2))], domains(&[(1, &[1, 2])]));
        assert_eq!(instance.interference().len(), 0);
        assert_eq!(
            warnings,
            vec![NormalizeWarning::SameStation { pair: pair(1, 1) }]
        );
    }

    #[test]
    fn normalize_drops_unknown_station() {
        let (instance, warnings) = normalize(
            &[(pair(1, 1), pair(3, 1))],
            domains(&[(1, &[1]), (2, &[1])]),
        );
        assert_eq!(instance.interference().len(), 0);
        assert_eq!(warnings.len(), 1);
        assert!(matches!(
            warnings[0],
            NormalizeWarning::UnknownStation {
                station: StationId(3),
                ..
            }
        ));
    }

    #[test]
    fn normalize_keeps_out_of_domain_channels() {
        // Channel 5 is not in station 1's domain; the constraint survives
        // normalization and only dies at graph construction.
        let (instance, warnings) = normalize(
            &[(pair(1, 5), pair(2, 1))],
            domains(&[(1, &[1, 2]), (2, &[1])]),
        );
        assert!(warnings.is_empty());
        assert_eq!(instance.interference().len(), 1);
    }

    #[test]
    fn normalize_is_idempotent() {
        let instance = ex1();
        let raw: Vec<RawConstraint> = instance
            .interference()
            .iter()
            .map(|c| (c.a(), c.b()))
            .collect();
        let (again, warnings) = normalize(&raw, instance.domains().clone());
        assert!(warnings.is_empty());
        assert_eq!(again, instance);
    }

    #[test]
    fn check_accepts_the_feasible_assignment() {
        let instance = ex1();
        assert!(instance.check(&assignment(&[(1, 2), (2, 1)]), true).is_empty());
    }

    #[test]
    fn check_reports_interference() {
        let instance = ex1();
        let violations = instance.check(&assignment(&[(1, 1), (2, 1)]), false);
        assert_eq!(violations.len(), 1);
        assert!(matches!(violations[0], Violation::Interference { .. }));
    }

    #[test]
    fn check_reports_domain_and_incomplete() {
        let instance = ex1();
        let violations = instance.check(&assignment(&[(1, 3)]), true);
        assert_eq!(
            violations,
            vec![
                Violation::Domain {
                    station: StationId(1),
                    channel: ChannelId(3),
                },
                Violation::Incomplete {
                    station: StationId(2)
                },
            ]
        );
    }

    #[test]
    fn cost_is_max_channel() {
        assert_eq!(assignment(&[(1, 2), (2, 1)]).cost(), Ok(ChannelId(2)));
        assert_eq!(assignment(&[(7, 14)]).cost(), Ok(ChannelId(14)));
        assert_eq!(
            Assignment::new().cost(),
            Err(ModelError::EmptyAssignmentCost)
        );
    }

    #[test]
    fn restrict_stations_clears_constraints() {
        let instance = ex1();
        let keep: BTreeSet<StationId> = [StationId(1)].into();
        let restricted = instance.restrict_stations(&keep).unwrap();
        assert_eq!(restricted.interference().len(), 0);
        assert_eq!(restricted.station_count(), 1);
        assert_eq!(
            restricted.domain(StationId(1)).unwrap().len(),
            2
        );
    }

    #[test]
    fn restrict_stations_identity_and_empty() {
        let instance = ex1();
        let all: BTreeSet<StationId> = instance.stations().collect();
        assert_eq!(instance.restrict_stations(&all).unwrap(), instance);

        let empty = instance.restrict_stations(&BTreeSet::new()).unwrap();
        assert_eq!(empty.station_count(), 0);
        assert_eq!(empty.interference().len(), 0);
        assert!(empty.check(&Assignment::new(), true).is_empty());
    }

    #[test]
    fn restrict_stations_rejects_unknown() {
        let instance = ex1();
        let keep: BTreeSet<StationId> = [StationId(1), StationId(9)].into();
        assert_eq!(
            instance.restrict_stations(&keep),
            Err(ModelError::UnknownStations(vec![StationId(9)]))
        );
    }

    #[test]
    fn restrict_channels_keeps_constraints_verbatim() {
        let instance = ex1();
        let restricted = instance.restrict_channels(ChannelId(1));
        assert_eq!(restricted.interference(), instance.interference());
        assert_eq!(
            restricted.domain(StationId(1)).unwrap(),
            &[ChannelId(1)].into()
        );
        assert!(!restricted.is_trivially_infeasible());

        assert_eq!(instance.restrict_channels(ChannelId(2)), instance);

        let emptied = instance.restrict_channels(ChannelId(0));
        assert!(emptied.is_trivially_infeasible());
        assert_eq!(
            emptied.empty_domain_stations(),
            vec![StationId(1), StationId(2)]
        );
    }

    #[test]
    fn offsets_of_co_channel_instance() {
        let profile = ex1().offsets();
        assert_eq!(profile.offsets().iter().copied().collect::<Vec<_>>(), vec![0]);
        assert_eq!(profile.max_offset(), Some(0));
        assert!(profile.is_consecutive_symmetric());
    }

    #[test]
    fn offsets_of_adjacent_constraint_are_gapped() {
        let (instance, _) = normalize(
            &[(pair(1, 1), pair(2, 2))],
            domains(&[(1, &[1]), (2, &[2])]),
        );
        let profile = instance.offsets();
        assert_eq!(
            profile.offsets().iter().copied().collect::<Vec<_>>(),
            vec![-1, 1]
        );
        assert_eq!(profile.max_offset(), Some(1));
        // 0 is missing, so the profile is not a consecutive symmetric run.
        assert!(!profile.is_consecutive_symmetric());
    }

    #[test]
    fn offsets_of_constraint_free_instance() {
        let (instance, _) = normalize(&[], domains(&[(1, &[1])]));
        let profile = instance.offsets();
        assert!(profile.offsets().is_empty());
        assert_eq!(profile.max_offset(), None);
        assert!(profile.is_consecutive_symmetric());
    }

    #[test]
    fn k_coloring_triangle() {
        let instance = encode_k_coloring(3, &[(0, 1), (1, 2), (0, 2)], 3).unwrap();
        assert_eq!(instance.station_count(), 3);
        // 3 edges x 3 channels
        assert_eq!(instance.interference().len(), 9);
        for s in instance.stations() {
            assert_eq!(instance.domain(s).unwrap().len(), 3);
        }
    }

    #[test]
    fn k_coloring_single_vertex() {
        let instance = encode_k_coloring(1, &[], 1).unwrap();
        assert_eq!(instance.station_count(), 1);
        assert!(instance
            .check(&assignment(&[(0, 1)]), true)
            .is_empty());
    }

    #[test]
    fn k_coloring_rejects_non_simple_graphs() {
        assert_eq!(
            encode_k_coloring(2, &[(0, 0)], 2),
            Err(ModelError::LoopEdge { vertex: 0 })
        );
        assert_eq!(
            encode_k_coloring(2, &[(0, 1), (1, 0)], 2),
            Err(ModelError::DuplicateEdge { u: 1, v: 0 })
        );
        assert_eq!(
            encode_k_coloring(2, &[(0, 2)], 2),
            Err(ModelError::EdgeOutOfRange {
                u: 0,
                v: 2,
                vertex_count: 2
            })
        );
        assert_eq!(encode_k_coloring(1, &[], 0), Err(ModelError::ZeroColors));
    }
}
