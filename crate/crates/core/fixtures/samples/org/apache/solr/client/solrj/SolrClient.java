package org.apache.solr.client.solrj;

import java.io.Closeable;
import java.io.Serializable;

import org.apache.solr.client.solrj.response.UpdateResponse;

/**
 * Abstraction through which all communication with a Solr server may be routed
 */
public abstract class SolrClient implements Serializable, Closeable {

  private static final long serialVersionUID = 1L;

  /**
   * Deletes a single document by unique ID
   * @param collection the Solr collection to delete the document from
   * @param id  the ID of the document to delete
   */
  public UpdateResponse deleteById(String collection, String id) {
    return deleteById(collection, id, -1);
  }

  /**
   * Deletes a single document by unique ID
   * @param id  the ID of the document to delete
   */
  public UpdateResponse deleteById(String id) {
    return deleteById(null, id);
  }

  protected abstract UpdateResponse deleteById(String collection, String id, int commitWithinMs);
}
