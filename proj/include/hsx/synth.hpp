#pragma once

#include <cstdint>
#include <string>

#include "hsx/record.hpp"

namespace hsx {

// Seeded generator for labeled corpora with a controllable degree of class
// separation. Each class draws most words from its own vocabulary and the
// rest from a shared pool, so classifiers can be good but not perfect and
// extra same-distribution data still helps. Used by tests and the benchmark.
struct SyntheticSpec {
    std::string dataset_id = "SY1";
    std::string language = "en";
    std::size_t size = 500;
    double hate_fraction = 0.35;
    std::uint64_t seed = 7;

    std::size_t class_vocabulary = 400;   // words private to each class
    std::size_t shared_vocabulary = 200;  // class-neutral words
    double class_word_probability = 0.7;
    std::size_t min_words = 6;
    std::size_t max_words = 12;
};

Dataset make_synthetic_dataset(const SyntheticSpec& spec);

// Same records under a new id with labels permuted uniformly: the marginal
// class distribution survives but the text-label association is destroyed.
Dataset shuffle_labels(const Dataset& dataset, const std::string& new_dataset_id,
                       std::uint64_t seed);

}  // namespace hsx
