#include "trigrearr/local_search.hpp"

#include "trigrearr/errors.hpp"

namespace trigrearr {

DenseRows::DenseRows(std::vector<std::vector<double>> rows) : rows_(std::move(rows))
{
    dim_ = rows_.empty() ? 0 : rows_.front().size();
    bounds_.reserve(rows_.size());
    for (const auto& row : rows_) {
        if (row.size() != dim_)
            throw DomainError("DenseRows: rows of different dimension");
        bounds_.push_back(sup_abs(row));
    }
}

void DenseRows::add(std::size_t j, double scale, std::span<double> out) const
{
    const auto& row = rows_[j];
    for (std::size_t i = 0; i < dim_; ++i)
        out[i] += scale * row[i];
}

TermRows::TermRows(std::shared_ptr<const GridTable> table, std::vector<Row> rows, bool withExtra)
    : table_(std::move(table)), rows_(std::move(rows)), withExtra_(withExtra)
{
    bounds_.reserve(rows_.size());
    for (const auto& r : rows_) {
        double b = std::hypot(r.a, r.b);
        if (withExtra_)
            b = std::max(b, std::abs(r.extra));
        bounds_.push_back(b);
    }
}

void TermRows::add(std::size_t j, double scale, std::span<double> out) const
{
    const Row& r = rows_[j];
    const std::size_t M = table_->size();
    const std::size_t step = static_cast<std::size_t>(r.k) % M;
    std::size_t q = 0;
    for (std::size_t l = 0; l < M; ++l) {
        out[l] += scale * table_->at(1, r.a, r.b, q);
        q += step;
        if (q >= M)
            q -= M;
    }
    if (withExtra_)
        out[M] += scale * r.extra;
}

} // namespace trigrearr
