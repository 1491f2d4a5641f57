"""Commonsense knowledge and emotional concept extraction for dialogue.

Pipeline: keyword extraction from a dialogue context, knowledge-triple
lookup and filtering, emotion-intensity and similarity scoring, concept
string rendering, plus dataset preprocessing and generation metrics.
"""

from dialogue_concepts.lexicon import (
    NormalizationBounds,
    VadEntry,
    VadLexicon,
    emotion_intensity,
    load_vad,
    min_max_scale,
)
from dialogue_concepts.knowledge import (
    Assertion,
    KnowledgeStore,
    ingest_conceptnet,
    load_store,
    relation_display,
    save_store,
)
from dialogue_concepts.embeddings import (
    Embedding,
    VectorStore,
    cosine,
    embed_phrase,
    embed_token,
    load_vectors,
)
from dialogue_concepts.keywords import (
    Keyword,
    StopwordSet,
    extract_keywords,
    load_stopwords,
    tokenize,
)
from dialogue_concepts.extractor import (
    ConceptSet,
    ExtractorConfig,
    ScoredTuple,
    extract_concepts,
    filter_tuples,
    render_concepts,
    score_tuple,
)
from dialogue_concepts.stemming import porter_stem, stems_equal
from dialogue_concepts.corpus import (
    Dialogue,
    DialogueExample,
    build_examples,
    format_decoder_input,
    format_encoder_input,
    load_dialogues,
)
from dialogue_concepts.metrics import corpus_perplexity, distinct_n, emotion_accuracy

__version__ = "0.1.0"
