import math


def score_documents(index, query_terms, total_documents):
    scores = {}
    for term in query_terms:
        posting_list = index.postings.get(term, set())
        if not posting_list:
            continue
        inverse_doc_frequency = math.log(total_documents / len(posting_list))
        for document_id in posting_list:
            doc_length = max(index.document_lengths.get(document_id, 1), 1)
            term_weight = inverse_doc_frequency / math.sqrt(doc_length)
            scores[document_id] = scores.get(document_id, 0.0) + term_weight
    return rank_by_score(scores)


def rank_by_score(scores):
    return sorted(scores.items(), key=lambda item: (-item[1], item[0]))
