#ifndef EVI_SAMPLE_HPP
#define EVI_SAMPLE_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace evi {

// Immutable ascending sample of size n >= 2 with the upper-order-statistic
// indexing convention: upper_order_stat(i) is the i-th largest value,
// i = 1 the maximum, i = n the minimum. All estimators go through this
// accessor; raw indexing invites off-by-one mistakes.
class OrderedSample {
public:
    // Sorts a copy of the data; rejects NaN/infinite entries and samples
    // of fewer than 2 values.
    static OrderedSample from_raw(std::vector<double> data);

    std::size_t size() const { return values_.size(); }

    // The i-th largest value, 1 <= i <= n.
    double upper_order_stat(std::size_t i) const;

    const std::vector<double>& values() const { return values_; }

private:
    explicit OrderedSample(std::vector<double> sorted) : values_(std::move(sorted)) {}
    std::vector<double> values_;
};

enum class SampleFormat { Plain, CsvColumn };

// Reads a sample file. Plain: one number per line, blank lines and '#'
// comments skipped. CsvColumn: the named column of a header-bearing CSV.
OrderedSample load_sample(const std::string& path, SampleFormat format,
                          const std::string& column = "");

}  // namespace evi

#endif  // EVI_SAMPLE_HPP
