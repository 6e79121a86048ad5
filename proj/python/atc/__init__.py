"""Arabic text categorization toolkit.

Thin wrapper over the compiled core. Typical use:

    import atc
    model = atc.train_dir("corpus/")
    result = model.classify(open("doc.txt", encoding="utf-8").read())
    print(result.best, result.scores)
"""

from ._atc import (
    ConfigMismatchError,
    Error,
    Model,
    Report,
    Result,
    StemmerConfig,
    StopWordList,
    UnclassifiableError,
    evaluate_dir,
    filter_token,
    load_model,
    normalize_token,
    preprocess,
    stem,
    tokenize,
    train,
    train_dir,
)

__all__ = [
    "ConfigMismatchError",
    "Error",
    "Model",
    "Report",
    "Result",
    "StemmerConfig",
    "StopWordList",
    "UnclassifiableError",
    "evaluate_dir",
    "filter_token",
    "load_model",
    "normalize_token",
    "preprocess",
    "stem",
    "tokenize",
    "train",
    "train_dir",
]
