#ifndef LRSCATTER_TOOLS_JSON_IO_H_
#define LRSCATTER_TOOLS_JSON_IO_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lrscatter/lrscatter.h"

namespace lrscatter::cli {

using Json = nlohmann::json;

// Anything the user got wrong: bad JSON, wrong shape, invalid values.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Literal JSON text, or @path to read it from a file.
Json ParseJson(const std::string& text, const std::string& what);

std::vector<int> IntArray(const Json& j, const std::string& what);

// Nonincreasing, nonnegative, padded with zeros to rank.
DominantWeight WeightFromJson(const Json& j, int rank,
                              const std::string& what);
BasisTuple TupleFromJson(const Json& j, const std::string& what);
// rank <= 0 means max letter + 1.
ReducedWord WordFromJson(const Json& j, int rank, const std::string& what);
// [{"i":1,"j":2,"c":0}, ...]
ParamCollection ParamsFromJson(const Json& j, int rank,
                               const std::string& what);

Json ToJson(const Partition& p);
Json ToJson(const DominantWeight& w);
Json ToJson(const BasisTuple& t);
Json ToJson(const ReducedWord& w);
Json ToJson(const ParamCollection& c);
Json ToJson(const LinearForm& f);
Json ToJson(const ConeDescription& d);
Json ToJson(const WeightedTupleSum& s);
Json ToJson(const Move& m);
Json ToJson(const BzPattern& f);

LinearForm FormFromJson(const Json& j);

}  // namespace lrscatter::cli

#endif  // LRSCATTER_TOOLS_JSON_IO_H_
