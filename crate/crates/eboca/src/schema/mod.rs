//! Typed domain model for biomedical concepts and their associations, plus
//! deterministic instance-IRI minting.

mod emit;

pub use emit::{association_to_triples, concept_to_triples, emit_ontology_axioms};

use percent_encoding::{utf8_percent_encode, AsciiSet, NON_ALPHANUMERIC};
use thiserror::Error;

use crate::rdf::{Iri, Literal};
use crate::vocab;

/// RFC 3986 unreserved characters stay literal; everything else is encoded.
const IRI_SEGMENT: &AsciiSet = &NON_ALPHANUMERIC
    .remove(b'-')
    .remove(b'.')
    .remove(b'_')
    .remove(b'~');

/// The percent-encoding set shared with the mapping engine's templates.
pub(crate) fn iri_segment_set() -> &'static AsciiSet {
    IRI_SEGMENT
}

#[derive(Debug, Error, PartialEq)]
pub enum SchemaError {
    #[error("local id must not be empty")]
    EmptyLocalId,
    #[error("{kind:?} association requires endpoints {expected_source:?} and {expected_target:?}, got {got_source:?} and {got_target:?}")]
    IncompatibleEndpoints {
        kind: AssociationKind,
        expected_source: ConceptKind,
        expected_target: ConceptKind,
        got_source: ConceptKind,
        got_target: ConceptKind,
    },
    #[error("score {0} is outside [0, 1]")]
    ScoreOutOfRange(f64),
    #[error("attribute property is not in the vocabulary catalog: {0}")]
    UnknownAttributeProperty(String),
}

/// The biomedical concept categories of the schema.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConceptKind {
    Disease,
    Gene,
    Protein,
    ProteinClass,
    Variant,
    Pathway,
    Drug,
    Phenotype,
    Target,
    Organism,
    NcRna,
}

impl ConceptKind {
    pub const ALL: [ConceptKind; 11] = [
        ConceptKind::Disease,
        ConceptKind::Gene,
        ConceptKind::Protein,
        ConceptKind::ProteinClass,
        ConceptKind::Variant,
        ConceptKind::Pathway,
        ConceptKind::Drug,
        ConceptKind::Phenotype,
        ConceptKind::Target,
        ConceptKind::Organism,
        ConceptKind::NcRna,
    ];

    /// Typing class for instances of this kind.
    pub fn class(&self) -> &'static Iri {
        match self {
            ConceptKind::Disease => &vocab::NCIT_DISEASE,
            ConceptKind::Gene => &vocab::NCIT_GENE,
            ConceptKind::Protein => &vocab::NCIT_PROTEIN,
            ConceptKind::ProteinClass => &vocab::OBO_PROTEIN_CLASS,
            ConceptKind::Variant => &vocab::OBO_VARIANT,
            ConceptKind::Pathway => &vocab::WP_PATHWAY,
            ConceptKind::Drug => &vocab::CCO_DRUG,
            ConceptKind::Phenotype => &vocab::SD_PHENOTYPE,
            ConceptKind::Target => &vocab::CCO_TARGET,
            ConceptKind::Organism => &vocab::NCIT_ORGANISM,
            ConceptKind::NcRna => &vocab::NCIT_NCRNA,
        }
    }

    /// Path segment used when minting instance IRIs.
    pub fn slug(&self) -> &'static str {
        match self {
            ConceptKind::Disease => "disease",
            ConceptKind::Gene => "gene",
            ConceptKind::Protein => "protein",
            ConceptKind::ProteinClass => "protein-class",
            ConceptKind::Variant => "variant",
            ConceptKind::Pathway => "pathway",
            ConceptKind::Drug => "drug",
            ConceptKind::Phenotype => "phenotype",
            ConceptKind::Target => "target",
            ConceptKind::Organism => "organism",
            ConceptKind::NcRna => "ncrna",
        }
    }

    /// Reverse of [`ConceptKind::class`].
    pub fn from_class(class: &Iri) -> Option<ConceptKind> {
        ConceptKind::ALL.into_iter().find(|k| k.class() == class)
    }
}

/// The association categories of the schema, one per typing class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AssociationKind {
    DiseaseGene,
    DiseaseVariant,
    DiseasePhenotype,
    DrugDiseaseMarker,
    DrugDiseaseTherapeutic,
    DrugDiseaseInferred,
    DrugTargetMechanism,
    DrugIndication,
    SideEffect,
    DrugDrugInteraction,
    GeneVariant,
    GenePathway,
    ProteinProteinInteraction,
    DiseaseNcRna,
}

impl AssociationKind {
    pub const ALL: [AssociationKind; 14] = [
        AssociationKind::DiseaseGene,
        AssociationKind::DiseaseVariant,
        AssociationKind::DiseasePhenotype,
        AssociationKind::DrugDiseaseMarker,
        AssociationKind::DrugDiseaseTherapeutic,
        AssociationKind::DrugDiseaseInferred,
        AssociationKind::DrugTargetMechanism,
        AssociationKind::DrugIndication,
        AssociationKind::SideEffect,
        AssociationKind::DrugDrugInteraction,
        AssociationKind::GeneVariant,
        AssociationKind::GenePathway,
        AssociationKind::ProteinProteinInteraction,
        AssociationKind::DiseaseNcRna,
    ];

    /// Most specific typing class asserted on instances of this kind.
    pub fn class(&self) -> &'static Iri {
        match self {
            AssociationKind::DiseaseGene => &vocab::SIO_DISEASE_GENE_ASSOCIATION,
            AssociationKind::DiseaseVariant => &vocab::SD_DISEASE_VARIANT_ASSOCIATION,
            AssociationKind::DiseasePhenotype => &vocab::SD_DISEASE_PHENOTYPE_ASSOCIATION,
            AssociationKind::DrugDiseaseMarker => &vocab::SD_DRUG_DISEASE_MARKER,
            AssociationKind::DrugDiseaseTherapeutic => &vocab::SD_DRUG_DISEASE_THERAPEUTIC,
            AssociationKind::DrugDiseaseInferred => &vocab::SD_DRUG_DISEASE_INFERRED,
            AssociationKind::DrugTargetMechanism => &vocab::SD_DRUG_TARGET_ASSOCIATION,
            AssociationKind::DrugIndication => &vocab::CCO_DRUG_INDICATION,
            AssociationKind::SideEffect => &vocab::SCT_SIDE_EFFECT,
            AssociationKind::DrugDrugInteraction => &vocab::SIO_DRUG_DRUG_INTERACTION,
            AssociationKind::GeneVariant => &vocab::SD_GENE_VARIANT_ASSOCIATION,
            AssociationKind::GenePathway => &vocab::SD_GENE_PATHWAY_ASSOCIATION,
            AssociationKind::ProteinProteinInteraction => &vocab::NCIT_PPI,
            AssociationKind::DiseaseNcRna => &vocab::SD_DISEASE_NCRNA_ASSOCIATION,
        }
    }

    pub fn slug(&self) -> &'static str {
        match self {
            AssociationKind::DiseaseGene => "disease-gene",
            AssociationKind::DiseaseVariant => "disease-variant",
            AssociationKind::DiseasePhenotype => "disease-phenotype",
            AssociationKind::DrugDiseaseMarker => "drug-disease-marker",
            AssociationKind::DrugDiseaseTherapeutic => "drug-disease-therapeutic",
            AssociationKind::DrugDiseaseInferred => "drug-disease-inferred",
            AssociationKind::DrugTargetMechanism => "drug-target-mechanism",
            AssociationKind::DrugIndication => "drug-indication",
            AssociationKind::SideEffect => "side-effect",
            AssociationKind::DrugDrugInteraction => "drug-drug-interaction",
            AssociationKind::GeneVariant => "gene-variant",
            AssociationKind::GenePathway => "gene-pathway",
            AssociationKind::ProteinProteinInteraction => "protein-protein-interaction",
            AssociationKind::DiseaseNcRna => "disease-ncrna",
        }
    }

    /// Concept kinds each side of the association must carry. Order follows
    /// the reading direction of the kind name; validation accepts either
    /// orientation.
    pub fn endpoint_kinds(&self) -> (ConceptKind, ConceptKind) {
        match self {
            AssociationKind::DiseaseGene => (ConceptKind::Disease, ConceptKind::Gene),
            AssociationKind::DiseaseVariant => (ConceptKind::Disease, ConceptKind::Variant),
            AssociationKind::DiseasePhenotype => (ConceptKind::Disease, ConceptKind::Phenotype),
            AssociationKind::DrugDiseaseMarker
            | AssociationKind::DrugDiseaseTherapeutic
            | AssociationKind::DrugDiseaseInferred => (ConceptKind::Drug, ConceptKind::Disease),
            AssociationKind::DrugTargetMechanism => (ConceptKind::Drug, ConceptKind::Target),
            AssociationKind::DrugIndication => (ConceptKind::Drug, ConceptKind::Phenotype),
            AssociationKind::SideEffect => (ConceptKind::Drug, ConceptKind::Phenotype),
            AssociationKind::DrugDrugInteraction => (ConceptKind::Drug, ConceptKind::Drug),
            AssociationKind::GeneVariant => (ConceptKind::Gene, ConceptKind::Variant),
            AssociationKind::GenePathway => (ConceptKind::Gene, ConceptKind::Pathway),
            AssociationKind::ProteinProteinInteraction => {
                (ConceptKind::Protein, ConceptKind::Protein)
            }
            AssociationKind::DiseaseNcRna => (ConceptKind::Disease, ConceptKind::NcRna),
        }
    }

    /// Reverse of [`AssociationKind::class`].
    pub fn from_class(class: &Iri) -> Option<AssociationKind> {
        AssociationKind::ALL
            .into_iter()
            .find(|k| k.class() == class)
    }
}

/// Everything an instance IRI can be minted for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MintKind {
    Concept(ConceptKind),
    Association(AssociationKind),
    Evidence,
    Paragraph,
    Expression,
    Score,
    Software,
    Agent,
}

impl MintKind {
    pub fn slug(&self) -> &'static str {
        match self {
            MintKind::Concept(k) => k.slug(),
            MintKind::Association(k) => k.slug(),
            MintKind::Evidence => "evidence",
            MintKind::Paragraph => "paragraph",
            MintKind::Expression => "expression",
            MintKind::Score => "score",
            MintKind::Software => "software",
            MintKind::Agent => "agent",
        }
    }
}

/// Mints the deterministic instance IRI for `(kind, local_id)` under the
/// active resource base. Injective per kind thanks to percent-encoding.
pub fn mint_iri(kind: MintKind, local_id: &str) -> Result<Iri, SchemaError> {
    mint_iri_with_base(vocab::resource_base(), kind, local_id)
}

/// Same as [`mint_iri`] with an explicit resource base (must end in `/`).
pub fn mint_iri_with_base(base: &str, kind: MintKind, local_id: &str) -> Result<Iri, SchemaError> {
    if local_id.is_empty() {
        return Err(SchemaError::EmptyLocalId);
    }
    let encoded = utf8_percent_encode(local_id, IRI_SEGMENT);
    Iri::new(format!("{}{}/{}", base, kind.slug(), encoded)).map_err(|_| SchemaError::EmptyLocalId)
}

/// A typed biomedical instance.
#[derive(Debug, Clone, PartialEq)]
pub struct ConceptEntity {
    pub kind: ConceptKind,
    pub local_id: String,
    pub name: Option<String>,
    pub linkouts: Vec<Iri>,
    pub attributes: Vec<(Iri, Literal)>,
}

impl ConceptEntity {
    pub fn new(kind: ConceptKind, local_id: impl Into<String>) -> Result<Self, SchemaError> {
        let local_id = local_id.into();
        if local_id.is_empty() {
            return Err(SchemaError::EmptyLocalId);
        }
        Ok(ConceptEntity {
            kind,
            local_id,
            name: None,
            linkouts: Vec::new(),
            attributes: Vec::new(),
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn with_linkout(mut self, iri: Iri) -> Self {
        self.linkouts.push(iri);
        self
    }

    /// Attaches a literal attribute; the property must be a catalog term.
    pub fn with_attribute(mut self, property: Iri, value: Literal) -> Result<Self, SchemaError> {
        if vocab::find(&property).is_none() {
            return Err(SchemaError::UnknownAttributeProperty(
                property.as_str().to_string(),
            ));
        }
        self.attributes.push((property, value));
        Ok(self)
    }

    pub fn iri(&self) -> Iri {
        mint_iri(MintKind::Concept(self.kind), &self.local_id)
            .expect("local_id checked at construction")
    }
}

/// Reference to a concept endpoint: enough to mint its IRI and check kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConceptRef {
    pub kind: ConceptKind,
    pub local_id: String,
}

impl ConceptRef {
    pub fn new(kind: ConceptKind, local_id: impl Into<String>) -> Result<Self, SchemaError> {
        let local_id = local_id.into();
        if local_id.is_empty() {
            return Err(SchemaError::EmptyLocalId);
        }
        Ok(ConceptRef { kind, local_id })
    }

    pub fn iri(&self) -> Iri {
        mint_iri(MintKind::Concept(self.kind), &self.local_id)
            .expect("local_id checked at construction")
    }
}

impl From<&ConceptEntity> for ConceptRef {
    fn from(c: &ConceptEntity) -> Self {
        ConceptRef {
            kind: c.kind,
            local_id: c.local_id.clone(),
        }
    }
}

/// A typed link between exactly two concepts, optionally scored.
#[derive(Debug, Clone, PartialEq)]
pub struct AssociationRecord {
    pub kind: AssociationKind,
    pub source: ConceptRef,
    pub target: ConceptRef,
    pub score: Option<f64>,
    pub local_id: String,
}

impl AssociationRecord {
    pub fn new(
        kind: AssociationKind,
        source: ConceptRef,
        target: ConceptRef,
        score: Option<f64>,
        local_id: impl Into<String>,
    ) -> Result<Self, SchemaError> {
        let local_id = local_id.into();
        if local_id.is_empty() {
            return Err(SchemaError::EmptyLocalId);
        }
        let (want_s, want_t) = kind.endpoint_kinds();
        let ok = (source.kind == want_s && target.kind == want_t)
            || (source.kind == want_t && target.kind == want_s);
        if !ok {
            return Err(SchemaError::IncompatibleEndpoints {
                kind,
                expected_source: want_s,
                expected_target: want_t,
                got_source: source.kind,
                got_target: target.kind,
            });
        }
        if let Some(s) = score {
            if !(0.0..=1.0).contains(&s) || s.is_nan() {
                return Err(SchemaError::ScoreOutOfRange(s));
            }
        }
        Ok(AssociationRecord {
            kind,
            source,
            target,
            score,
            local_id,
        })
    }

    pub fn iri(&self) -> Iri {
        mint_iri(MintKind::Association(self.kind), &self.local_id)
            .expect("local_id checked at construction")
    }
}
