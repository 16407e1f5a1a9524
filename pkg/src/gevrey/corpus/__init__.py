from gevrey.corpus.painleve import (
    DEFAULT_NUMBER_OF_TERMS,
    EQUATIONS,
    PAINLEVE_III_TEXT,
    PAINLEVE_V_TEXT,
    PRESETS,
    CaseOutcome,
    CorpusCase,
    ParameterSet,
    corpus,
    dump_cases,
    load_cases,
    painleve_iii,
    painleve_v,
    painleve_v_without_delta,
    run_corpus_check,
)
