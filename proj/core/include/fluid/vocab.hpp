#pragma once

#include <string_view>

namespace fluid::vocab {

inline constexpr std::string_view kRdfType =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kRdfLangString =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
inline constexpr std::string_view kXsdString =
    "http://www.w3.org/2001/XMLSchema#string";

inline constexpr std::string_view kRdfsSubClassOf =
    "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline constexpr std::string_view kRdfsSubPropertyOf =
    "http://www.w3.org/2000/01/rdf-schema#subPropertyOf";
inline constexpr std::string_view kRdfsDomain =
    "http://www.w3.org/2000/01/rdf-schema#domain";
inline constexpr std::string_view kRdfsRange =
    "http://www.w3.org/2000/01/rdf-schema#range";

inline constexpr std::string_view kOwlSameAs =
    "http://www.w3.org/2002/07/owl#sameAs";

// Index serialization vocabulary.
inline constexpr std::string_view kIndexNamespace = "urn:fluid:";
inline constexpr std::string_view kSchemaElement = "urn:fluid:SchemaElement";
inline constexpr std::string_view kHasType = "urn:fluid:hasType";
inline constexpr std::string_view kHasProperty = "urn:fluid:hasProperty";
inline constexpr std::string_view kHasIncomingProperty =
    "urn:fluid:hasIncomingProperty";
inline constexpr std::string_view kHasNeighbor = "urn:fluid:hasNeighbor";
inline constexpr std::string_view kFoundIn = "urn:fluid:foundIn";
inline constexpr std::string_view kElementPrefix = "urn:fluid:e/";
inline constexpr std::string_view kEmptyElement = "urn:fluid:empty";

inline constexpr std::string_view kDefaultSource = "urn:fluid:default-source";

}  // namespace fluid::vocab
