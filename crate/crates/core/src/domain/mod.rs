//! The miniature archive domain shared by all three architectures: entity
//! types, module ownership, deterministic corpus generation and the
//! referential-integrity scan.

mod generate;
mod refcheck;

pub use generate::generate_corpus;
pub use refcheck::{dataset_stats, scan_records, DanglingRef, RefField, StatsSummary};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ArchError;

/// 128-bit entity identifier, printed as 32 lowercase hex digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EntityId(pub u128);

impl fmt::Display for EntityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:032x}", self.0)
    }
}

impl FromStr for EntityId {
    type Err = ArchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        u128::from_str_radix(s, 16)
            .map(EntityId)
            .map_err(|_| ArchError::Protocol(format!("bad entity id: {s:?}")))
    }
}

impl Serialize for EntityId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for EntityId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The five back-end modules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleName {
    Text,
    User,
    Virtual,
    Recommendation,
    Game,
}

impl ModuleName {
    pub const ALL: [ModuleName; 5] = [
        ModuleName::Text,
        ModuleName::User,
        ModuleName::Virtual,
        ModuleName::Recommendation,
        ModuleName::Game,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ModuleName::Text => "text",
            ModuleName::User => "user",
            ModuleName::Virtual => "virtual",
            ModuleName::Recommendation => "recommendation",
            ModuleName::Game => "game",
        }
    }

    /// Modules this module's requires interface binds to. The graph is fixed
    /// and acyclic: Text and User require nothing, Virtual requires Text and
    /// User, Recommendation requires Virtual and Text, Game requires Virtual.
    pub fn requires(&self) -> &'static [ModuleName] {
        match self {
            ModuleName::Text | ModuleName::User => &[],
            ModuleName::Virtual => &[ModuleName::Text, ModuleName::User],
            ModuleName::Recommendation => &[ModuleName::Virtual, ModuleName::Text],
            ModuleName::Game => &[ModuleName::Virtual],
        }
    }
}

impl fmt::Display for ModuleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ModuleName {
    type Err = ArchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(ModuleName::Text),
            "user" => Ok(ModuleName::User),
            "virtual" => Ok(ModuleName::Virtual),
            "recommendation" => Ok(ModuleName::Recommendation),
            "game" => Ok(ModuleName::Game),
            other => Err(ArchError::Configuration(format!("unknown module: {other}"))),
        }
    }
}

/// Every entity type in the archive, with its owning module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EntityType {
    Fragment,
    Source,
    ScholarInter,
    ExpertEdition,
    SimpleText,
    User,
    VirtualEdition,
    VirtualEditionInter,
    Tag,
    Annotation,
    Member,
    SelectedBy,
    RecommendationWeights,
    ClassificationGame,
}

impl EntityType {
    pub const ALL: [EntityType; 14] = [
        EntityType::Fragment,
        EntityType::Source,
        EntityType::ScholarInter,
        EntityType::ExpertEdition,
        EntityType::SimpleText,
        EntityType::User,
        EntityType::VirtualEdition,
        EntityType::VirtualEditionInter,
        EntityType::Tag,
        EntityType::Annotation,
        EntityType::Member,
        EntityType::SelectedBy,
        EntityType::RecommendationWeights,
        EntityType::ClassificationGame,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            EntityType::Fragment => "Fragment",
            EntityType::Source => "Source",
            EntityType::ScholarInter => "ScholarInter",
            EntityType::ExpertEdition => "ExpertEdition",
            EntityType::SimpleText => "SimpleText",
            EntityType::User => "User",
            EntityType::VirtualEdition => "VirtualEdition",
            EntityType::VirtualEditionInter => "VirtualEditionInter",
            EntityType::Tag => "Tag",
            EntityType::Annotation => "Annotation",
            EntityType::Member => "Member",
            EntityType::SelectedBy => "SelectedBy",
            EntityType::RecommendationWeights => "RecommendationWeights",
            EntityType::ClassificationGame => "ClassificationGame",
        }
    }

    pub fn owner(&self) -> ModuleName {
        match self {
            EntityType::Fragment
            | EntityType::Source
            | EntityType::ScholarInter
            | EntityType::ExpertEdition
            | EntityType::SimpleText => ModuleName::Text,
            EntityType::User => ModuleName::User,
            EntityType::VirtualEdition
            | EntityType::VirtualEditionInter
            | EntityType::Tag
            | EntityType::Annotation
            | EntityType::Member
            | EntityType::SelectedBy => ModuleName::Virtual,
            EntityType::RecommendationWeights => ModuleName::Recommendation,
            EntityType::ClassificationGame => ModuleName::Game,
        }
    }

    pub fn owned_by(module: ModuleName) -> Vec<EntityType> {
        EntityType::ALL
            .iter()
            .copied()
            .filter(|t| t.owner() == module)
            .collect()
    }

    /// By-value reference fields of this type, used by the integrity scan and
    /// the fk indexes of the stores.
    pub fn ref_fields(&self) -> &'static [RefField] {
        refcheck::ref_fields(*self)
    }
}

impl fmt::Display for EntityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InkType {
    Pen,
    Pencil,
    Typewritten,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum InterKind {
    ExpertEdition,
    SourceInter,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct Fragment {
    pub id: EntityId,
    pub title: String,
    pub body: Vec<String>,
    pub date: i32,
    pub source_ids: Vec<EntityId>,
    pub inter_ids: Vec<EntityId>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct Source {
    pub id: EntityId,
    pub fragment_id: EntityId,
    pub date: i32,
    pub width_mm: u32,
    pub height_mm: u32,
    pub ink_type: InkType,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ScholarInter {
    pub id: EntityId,
    pub fragment_id: EntityId,
    pub kind: InterKind,
    /// Present iff kind is expertEdition.
    pub edition_id: Option<EntityId>,
    pub order_in_edition: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ExpertEdition {
    pub id: EntityId,
    pub editor: String,
    pub year: i32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct SimpleText {
    pub id: EntityId,
    pub fragment_id: EntityId,
    pub content: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct User {
    pub id: EntityId,
    pub username: String,
    pub active: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct VirtualEdition {
    pub id: EntityId,
    pub owner_user_id: EntityId,
    pub inter_ids: Vec<EntityId>,
}

/// Cross-module links (`fragment_id`, `scholar_inter_id`) are identifiers by
/// value, never object references; `uses_inter_id` is the reflexive
/// association inside the Virtual module.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct VirtualEditionInter {
    pub id: EntityId,
    pub virtual_edition_id: EntityId,
    pub fragment_id: EntityId,
    pub scholar_inter_id: EntityId,
    pub uses_inter_id: Option<EntityId>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct Tag {
    pub id: EntityId,
    pub inter_id: EntityId,
    pub user_id: EntityId,
    pub label: String,
    /// Set when the tag belongs to an annotation; removing the annotation
    /// removes the tag.
    pub annotation_id: Option<EntityId>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct Annotation {
    pub id: EntityId,
    pub inter_id: EntityId,
    pub user_id: EntityId,
    pub simple_text_id: EntityId,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct Member {
    pub id: EntityId,
    pub virtual_edition_id: EntityId,
    pub user_id: EntityId,
}

/// Table-5 names a "SelectedBy" entity the paper never defines; modeled as a
/// Member-like join record.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct SelectedBy {
    pub id: EntityId,
    pub virtual_edition_id: EntityId,
    pub user_id: EntityId,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct RecommendationWeights {
    pub id: EntityId,
    pub user_id: EntityId,
    /// criterion name → weight in [0,1]; normalized to sum 1 when used.
    pub weights: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ClassificationGame {
    pub id: EntityId,
    pub virtual_edition_id: EntityId,
    pub inter_id: EntityId,
    pub tag_ids: Vec<EntityId>,
    pub creator_user_id: EntityId,
}

/// Parameters of the deterministic corpus generator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CorpusSpec {
    pub seed: u64,
    pub fragment_count: u32,
    pub user_count: u32,
    pub virtual_edition_count: u32,
    #[serde(default = "default_vocabulary_size")]
    pub vocabulary_size: u32,
}

fn default_vocabulary_size() -> u32 {
    500
}

impl CorpusSpec {
    pub fn new(seed: u64, fragment_count: u32) -> Self {
        Self {
            seed,
            fragment_count,
            user_count: 5,
            virtual_edition_count: 2,
            vocabulary_size: default_vocabulary_size(),
        }
    }

    pub fn validate(&self) -> Result<(), ArchError> {
        if self.user_count < 1 {
            return Err(ArchError::InvalidSpec("userCount must be >= 1".into()));
        }
        if self.virtual_edition_count < 1 {
            return Err(ArchError::InvalidSpec(
                "virtualEditionCount must be >= 1".into(),
            ));
        }
        if self.vocabulary_size < 1 {
            return Err(ArchError::InvalidSpec("vocabularySize must be >= 1".into()));
        }
        Ok(())
    }
}

/// A complete synthetic archive. Immutable after generation; exported and
/// imported as one JSON document with a top-level array per entity type.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CorpusDataset {
    pub spec: Option<CorpusSpec>,
    pub fragments: Vec<Fragment>,
    pub sources: Vec<Source>,
    pub scholar_inters: Vec<ScholarInter>,
    pub expert_editions: Vec<ExpertEdition>,
    pub simple_texts: Vec<SimpleText>,
    pub users: Vec<User>,
    pub virtual_editions: Vec<VirtualEdition>,
    pub virtual_edition_inters: Vec<VirtualEditionInter>,
    pub tags: Vec<Tag>,
    pub annotations: Vec<Annotation>,
    pub members: Vec<Member>,
    pub selected_by: Vec<SelectedBy>,
    pub recommendation_weights: Vec<RecommendationWeights>,
    pub classification_games: Vec<ClassificationGame>,
}

impl CorpusDataset {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("dataset serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self, ArchError> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn count(&self, ty: EntityType) -> usize {
        match ty {
            EntityType::Fragment => self.fragments.len(),
            EntityType::Source => self.sources.len(),
            EntityType::ScholarInter => self.scholar_inters.len(),
            EntityType::ExpertEdition => self.expert_editions.len(),
            EntityType::SimpleText => self.simple_texts.len(),
            EntityType::User => self.users.len(),
            EntityType::VirtualEdition => self.virtual_editions.len(),
            EntityType::VirtualEditionInter => self.virtual_edition_inters.len(),
            EntityType::Tag => self.tags.len(),
            EntityType::Annotation => self.annotations.len(),
            EntityType::Member => self.members.len(),
            EntityType::SelectedBy => self.selected_by.len(),
            EntityType::RecommendationWeights => self.recommendation_weights.len(),
            EntityType::ClassificationGame => self.classification_games.len(),
        }
    }

    /// Records of one entity type as canonical JSON objects, in generation
    /// order. This is the representation the service stores load.
    pub fn records(&self, ty: EntityType) -> Vec<serde_json::Value> {
        fn vals<T: Serialize>(xs: &[T]) -> Vec<serde_json::Value> {
            xs.iter()
                .map(|x| serde_json::to_value(x).expect("entity serializes"))
                .collect()
        }
        match ty {
            EntityType::Fragment => vals(&self.fragments),
            EntityType::Source => vals(&self.sources),
            EntityType::ScholarInter => vals(&self.scholar_inters),
            EntityType::ExpertEdition => vals(&self.expert_editions),
            EntityType::SimpleText => vals(&self.simple_texts),
            EntityType::User => vals(&self.users),
            EntityType::VirtualEdition => vals(&self.virtual_editions),
            EntityType::VirtualEditionInter => vals(&self.virtual_edition_inters),
            EntityType::Tag => vals(&self.tags),
            EntityType::Annotation => vals(&self.annotations),
            EntityType::Member => vals(&self.members),
            EntityType::SelectedBy => vals(&self.selected_by),
            EntityType::RecommendationWeights => vals(&self.recommendation_weights),
            EntityType::ClassificationGame => vals(&self.classification_games),
        }
    }

    /// The generator's "full" virtual edition (one inter per fragment).
    pub fn full_edition(&self) -> Option<&VirtualEdition> {
        self.virtual_editions.first()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entity_id_round_trips_through_hex() {
        let id = EntityId(0xdead_beef_0042);
        let s = id.to_string();
        assert_eq!(s.len(), 32);
        assert_eq!(s.parse::<EntityId>().unwrap(), id);
    }

    #[test]
    fn requires_graph_matches_fixed_shape() {
        assert!(ModuleName::Text.requires().is_empty());
        assert!(ModuleName::User.requires().is_empty());
        assert_eq!(
            ModuleName::Virtual.requires(),
            &[ModuleName::Text, ModuleName::User]
        );
        assert_eq!(
            ModuleName::Recommendation.requires(),
            &[ModuleName::Virtual, ModuleName::Text]
        );
        assert_eq!(ModuleName::Game.requires(), &[ModuleName::Virtual]);
    }

    #[test]
    fn ownership_covers_every_type() {
        let mut per_module = BTreeMap::new();
        for ty in EntityType::ALL {
            *per_module.entry(ty.owner()).or_insert(0usize) += 1;
        }
        assert_eq!(per_module[&ModuleName::Text], 5);
        assert_eq!(per_module[&ModuleName::User], 1);
        assert_eq!(per_module[&ModuleName::Virtual], 6);
        assert_eq!(per_module[&ModuleName::Recommendation], 1);
        assert_eq!(per_module[&ModuleName::Game], 1);
    }
}
