#include "hsx/synth.hpp"

#include "hsx/common.hpp"
#include "hsx/rng.hpp"
#include "hsx/text.hpp"

namespace hsx {

Dataset make_synthetic_dataset(const SyntheticSpec& spec) {
    if (spec.size == 0) throw Error("synthetic dataset: size must be positive");
    if (spec.hate_fraction < 0.0 || spec.hate_fraction > 1.0) {
        throw Error("synthetic dataset: hate_fraction outside [0,1]");
    }
    if (spec.min_words == 0 || spec.max_words < spec.min_words) {
        throw Error("synthetic dataset: bad word count range");
    }

    const std::size_t hate_count =
        static_cast<std::size_t>(spec.hate_fraction * static_cast<double>(spec.size) + 0.5);

    SplitMix64 rng = derive_stream(spec.seed, {"synth", spec.dataset_id});

    // interleave the classes so splits see both throughout
    std::vector<Label> labels(spec.size, Label::NonHate);
    for (std::size_t i = 0; i < hate_count; ++i) labels[i] = Label::Hate;
    fisher_yates_shuffle(labels, rng);

    Dataset ds;
    ds.meta.dataset_id = spec.dataset_id;
    ds.meta.language = spec.language;
    ds.meta.platform = Platform::Other;
    ds.meta.availability = Availability::Open;

    ds.records.reserve(spec.size);
    for (std::size_t i = 0; i < spec.size; ++i) {
        const Label label = labels[i];
        const std::size_t words =
            spec.min_words + rng.next_below(spec.max_words - spec.min_words + 1);
        std::string text;
        for (std::size_t w = 0; w < words; ++w) {
            if (!text.empty()) text.push_back(' ');
            if (rng.next_unit() < spec.class_word_probability) {
                const std::size_t k = rng.next_below(spec.class_vocabulary);
                text += (label == Label::Hate ? "vile" : "calm") + std::to_string(k);
            } else {
                text += "word" + std::to_string(rng.next_below(spec.shared_vocabulary));
            }
        }
        CommentRecord rec;
        rec.dataset_id = spec.dataset_id;
        rec.platform = ds.meta.platform;
        rec.language = spec.language;
        rec.record_id = make_record_id(spec.dataset_id, i, text);
        rec.clean_text = clean_text(text);
        rec.raw_text = std::move(text);
        rec.label = label;
        ds.records.push_back(std::move(rec));
    }
    ds.recompute_stats();
    return ds;
}

Dataset shuffle_labels(const Dataset& dataset, const std::string& new_dataset_id,
                       std::uint64_t seed) {
    Dataset out = dataset;
    out.meta.dataset_id = new_dataset_id;
    std::vector<std::optional<Label>> labels;
    labels.reserve(out.records.size());
    for (const CommentRecord& rec : out.records) labels.push_back(rec.label);
    SplitMix64 rng = derive_stream(seed, {"shuffle-labels", new_dataset_id});
    fisher_yates_shuffle(labels, rng);
    for (std::size_t i = 0; i < out.records.size(); ++i) {
        CommentRecord& rec = out.records[i];
        rec.dataset_id = new_dataset_id;
        rec.record_id = make_record_id(new_dataset_id, i, rec.raw_text);
        rec.label = labels[i];
    }
    out.recompute_stats();
    return out;
}

}  // namespace hsx
